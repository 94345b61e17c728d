#pragma once

#include <cstdint>
#include <string>

#include "matsec/instance.hpp"

namespace matsec {

// Parameters of the instance generators; fields irrelevant to a kind are
// ignored. Negative values mean "derive something sensible from n".
struct GeneratorParams {
  std::string kind;  // uniform | partition | graphic-random | laminar-random | laminar-clustered
  int n = 10;
  std::uint64_t seed = 1;

  int rank = -1;      // uniform
  int parts = -1;     // partition
  int vertices = -1;  // graphic-random
  int depth = 2;      // laminar-random

  int cluster_size = 4;      // laminar-clustered
  int cluster_capacity = 1;  // laminar-clustered

  bool integer_weights = false;  // small integer weights (forces ties)
};

// Deterministic in (kind, params, seed). laminar-clustered packs the top
// cluster_size weights into one capacity-limited set, the stress case where
// many strong elements compete for few slots.
Instance generate_instance(const GeneratorParams& params);

}  // namespace matsec

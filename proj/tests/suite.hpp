#pragma once

#include <vector>

#include "matsec/generators.hpp"
#include "matsec/instance.hpp"

#include "test_util.hpp"

namespace testutil {

// Deterministic reference instances shared by the unit and acceptance tests:
// at least twenty, covering all four matroid families at enumeration scale.
inline std::vector<Instance> reference_suite() {
  using matsec::GeneratorParams;
  std::vector<Instance> suite;

  auto gen = [&](GeneratorParams p) { suite.push_back(matsec::generate_instance(p)); };

  GeneratorParams p;

  p.kind = "uniform";
  p.n = 8, p.rank = 3, p.seed = 11;
  gen(p);
  p.n = 10, p.rank = 4, p.seed = 12;
  gen(p);
  p.n = 12, p.rank = 2, p.seed = 13;
  gen(p);
  p.n = 6, p.rank = 6, p.seed = 14;
  gen(p);
  p.n = 9, p.rank = 3, p.seed = 15, p.integer_weights = true;  // forces weight ties
  gen(p);
  p.integer_weights = false;

  p = GeneratorParams{};
  p.kind = "partition";
  p.n = 8, p.parts = 3, p.seed = 21;
  gen(p);
  p.n = 10, p.parts = 4, p.seed = 22;
  gen(p);
  p.n = 12, p.parts = 4, p.seed = 23;
  gen(p);
  p.n = 9, p.parts = 3, p.seed = 24, p.integer_weights = true;
  gen(p);
  p.integer_weights = false;

  p = GeneratorParams{};
  p.kind = "graphic-random";
  p.n = 8, p.vertices = 6, p.seed = 31;
  gen(p);
  p.n = 10, p.vertices = 7, p.seed = 32;
  gen(p);
  p.n = 12, p.vertices = 8, p.seed = 33;
  gen(p);
  suite.push_back(triangle());

  p = GeneratorParams{};
  p.kind = "laminar-random";
  p.n = 8, p.depth = 2, p.seed = 41;
  gen(p);
  p.n = 9, p.depth = 3, p.seed = 42;
  gen(p);
  p.n = 10, p.depth = 3, p.seed = 43;
  gen(p);
  p.n = 12, p.depth = 3, p.seed = 46;
  gen(p);

  p = GeneratorParams{};
  p.kind = "laminar-clustered";
  p.n = 10, p.cluster_size = 4, p.cluster_capacity = 1, p.seed = 44;
  gen(p);
  p.n = 12, p.cluster_size = 4, p.cluster_capacity = 2, p.seed = 45;
  gen(p);

  suite.push_back(small_laminar());
  suite.push_back(flat_laminar(6, 3));

  return suite;
}

inline std::vector<Instance> laminar_suite() {
  std::vector<Instance> result;
  for (Instance& instance : reference_suite()) {
    if (instance.matroid().type_name() == "laminar") result.push_back(std::move(instance));
  }
  return result;
}

// The three instances pinned for Monte Carlo vs exact comparisons.
inline std::vector<Instance> monte_carlo_refs() {
  std::vector<Instance> refs;
  matsec::GeneratorParams p;
  p.kind = "uniform";
  p.n = 8, p.rank = 3, p.seed = 11;
  refs.push_back(matsec::generate_instance(p));
  refs.push_back(small_laminar());
  p = matsec::GeneratorParams{};
  p.kind = "laminar-random";
  p.n = 8, p.depth = 2, p.seed = 41;
  refs.push_back(matsec::generate_instance(p));
  return refs;
}

}  // namespace testutil

#pragma once

#include <cstdint>
#include <string>

#include "matsec/instance.hpp"
#include "matsec/stats.hpp"
#include "matsec/types.hpp"

namespace matsec {

enum class AlgorithmKind { kFreeOrder, kLaminarSimple, kLaminarImproved };

std::string to_string(AlgorithmKind kind);
AlgorithmKind algorithm_from_string(const std::string& name);

struct ExperimentConfig {
  AlgorithmKind algorithm = AlgorithmKind::kFreeOrder;
  long long trials = 10000;
  std::uint64_t seed = 1;
  double q = -1.0;  // < 0: algorithm default
  Phase2Order phase2_order = Phase2Order::kDefault;
  int threads = 0;  // 0: hardware concurrency
};

// Runs `trials` independent trials, each on its own rng stream derived from
// (seed, trial index), asserts independence of every returned set, and
// aggregates. Trials are processed in fixed-size chunks whose partial sums
// merge in chunk order, so results do not depend on the number of threads.
// Throws ValidationError(kInvalidParams) on an algorithm/matroid mismatch or
// a bad q / trial count.
RunStats run_trials(const Instance& instance, const ExperimentConfig& config);

struct WorstOrderReport {
  double expected_weight = 0.0;  // under the per-sample worst arrival order
  double opt_weight = 0.0;
  double ratio = 0.0;
};

// Exhaustive adversarial order search (n <= 8): for every sample set the
// adversary picks the phase-2 arrival order minimizing the outcome (for the
// simple laminar procedure: minimizing the parity-coin average, the coin
// being internal randomness the adversary cannot see). No guarantee is
// attached to the result; it measures how much a procedure leans on its
// phase-2 order.
WorstOrderReport worst_phase2_order_search(const Instance& instance, AlgorithmKind algorithm,
                                           double q = -1.0);

}  // namespace matsec

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "matsec/instance.hpp"
#include "matsec/rng.hpp"

namespace matsec {

// Sampling probabilities of the two laminar procedures.
inline constexpr double kSimpleSampleProb = 2.0 / 3.0;
inline constexpr double kImprovedSampleProb = 0.5773502691896257;  // 1/sqrt(3)

// A family of disjoint element sets, each selected from independently with a
// single-choice rule. Parts are contiguous blocks in the laminar tree's
// consecutive numbering.
struct PartitionScheme {
  enum class Source { kOdd, kEven, kInterval, kWhole };

  Source source = Source::kWhole;
  std::vector<std::vector<ElementId>> parts;  // disjoint, nonempty
  std::vector<int> part_of;                   // element -> part index, -1 if none

  int part_count() const { return static_cast<int>(parts.size()); }
};

struct OddEvenFamilies {
  PartitionScheme odd;
  PartitionScheme even;
};

// Gap parts between consecutive anchors of opt_a (positions in consecutive
// numbering), restricted to the unsampled elements, split by gap parity.
// Empty parts are dropped. opt_a must be nonempty.
OddEvenFamilies odd_even_parts(const Instance& instance, std::span<const std::uint8_t> in_sample,
                               std::span<const ElementId> opt_a);

// Partition of the whole ground set anchored at an independent set: each
// element joins the part of the nearest anchor inside the smallest laminar
// set that contains the element and meets `anchors` (preferring the anchor at
// or before it in consecutive order). anchors == empty yields {N}. Throws if
// `anchors` is dependent.
PartitionScheme interval_partition(const Instance& instance, std::span<const ElementId> anchors);

// interval_partition(opt_a) with sampled elements removed and empty parts
// dropped: the scheme the improved procedure selects from.
PartitionScheme improved_scheme(const Instance& instance, std::span<const std::uint8_t> in_sample,
                                std::span<const ElementId> opt_a);

// Single part holding all unsampled elements (used when opt_a is empty).
PartitionScheme whole_scheme(const Instance& instance, std::span<const std::uint8_t> in_sample);

// One threshold rule per part, driven by the arrival stream; arrivals in no
// part are consumed and discarded. Returns the union of the selections.
std::vector<ElementId> run_scheme_phase2(const Instance& instance, const PartitionScheme& scheme,
                                         std::span<const ElementId> arrivals);

// Diagnostics of one laminar run.
struct LaminarRun {
  std::vector<ElementId> sample;
  std::vector<ElementId> opt_a;
  PartitionScheme scheme;
  std::vector<ElementId> chosen;
};

// Simple laminar procedure: observe a Binomial(n, 2/3) prefix of a random
// arrival order, build the gap parts around the sample optimum, keep one
// parity at random, then run one single-choice rule per kept part.
std::vector<ElementId> run_simple_laminar(const Instance& instance, Rng& rng,
                                          Phase2Order order = Phase2Order::kDefault,
                                          LaminarRun* out = nullptr);

// Improved laminar procedure: observe a Binomial(n, q) prefix, reduce to the
// unitary partition scheme anchored at the sample optimum, run one
// single-choice rule per part.
std::vector<ElementId> run_improved_laminar(const Instance& instance, Rng& rng,
                                            double q = kImprovedSampleProb,
                                            Phase2Order order = Phase2Order::kDefault,
                                            LaminarRun* out = nullptr);

// Deterministic cores used by the runs, tests and the exact oracles.
PartitionScheme simple_scheme(const Instance& instance, std::span<const std::uint8_t> in_sample,
                              std::span<const ElementId> opt_a, bool pick_odd);

}  // namespace matsec

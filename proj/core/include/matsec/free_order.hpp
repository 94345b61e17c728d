#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "matsec/instance.hpp"
#include "matsec/rng.hpp"

namespace matsec {

// Observation phase of the free order procedure: the sampled set, heaviest
// first, plus a membership mask.
struct SamplePhase {
  std::vector<ElementId> sample;          // a_1, ..., a_m, weight descending
  std::vector<std::uint8_t> in_sample;    // size n

  int m() const { return static_cast<int>(sample.size()); }
};

// Each element joins the sample independently with probability 1/2.
SamplePhase draw_sample_phase(const Instance& instance, Rng& rng);

// Sample forced to a given set (order irrelevant); used by enumeration.
SamplePhase make_sample_phase(const Instance& instance, std::span<const ElementId> sample);

// Order in which the remaining elements are requested: layer i holds the
// elements newly spanned by the i-th sample prefix, the tail everything the
// sample never spans. Within a layer ids ascend.
struct RevealSchedule {
  std::vector<int> layer;        // kInSample / 1..m / m+1 (tail)
  std::vector<ElementId> order;  // the draw order over all of N \ A
  int m = 0;

  bool in_tail(ElementId f) const { return layer[static_cast<size_t>(f)] == m + 1; }
  std::vector<std::vector<ElementId>> layer_sets() const;  // diagnostics
  std::vector<ElementId> tail() const;
};

RevealSchedule reveal_schedule(const Instance& instance, const SamplePhase& phase);

// Whether f improves the best independent set of the sample: f is outside
// the span of the sampled elements heavier than f.
bool is_good(const Instance& instance, const SamplePhase& phase, const RevealSchedule& schedule,
             ElementId f);

// The free order procedure: sample half, then accept every good element that
// keeps the pick independent, requesting elements in schedule order. The
// other orders exist to probe how much the schedule matters; rng is required
// for kRandom only.
std::vector<ElementId> run_free_order(const Instance& instance, const SamplePhase& phase,
                                      Phase2Order order = Phase2Order::kSchedule,
                                      Rng* rng = nullptr);
std::vector<ElementId> run_free_order(const Instance& instance, Rng& rng,
                                      Phase2Order order = Phase2Order::kSchedule);

// Same acceptance rule, but elements requested in exactly the given order
// (a permutation of the unsampled elements); used by the adversarial order
// search.
std::vector<ElementId> run_free_order_with_order(const Instance& instance,
                                                 const SamplePhase& phase,
                                                 std::span<const ElementId> draw_order);

// Positions in the weight order at which f becomes spanned by the sampled /
// unsampled side (f itself excluded), kInfinity when it never does.
struct JIndices {
  static constexpr int kInfinity = std::numeric_limits<int>::max();
  int j1 = kInfinity;
  int j2 = kInfinity;
};

JIndices j_indices(const Instance& instance, std::span<const std::uint8_t> in_sample, ElementId f);

}  // namespace matsec

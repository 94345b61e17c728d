#include "matsec/free_order.hpp"

#include <algorithm>

#include "matsec/greedy.hpp"

namespace matsec {

SamplePhase make_sample_phase(const Instance& instance, std::span<const ElementId> sample) {
  SamplePhase phase;
  phase.in_sample.assign(static_cast<size_t>(instance.n()), 0);
  phase.sample.assign(sample.begin(), sample.end());
  for (ElementId f : phase.sample) {
    if (f < 0 || f >= instance.n()) {
      throw std::out_of_range("sample element outside ground set");
    }
    if (phase.in_sample[static_cast<size_t>(f)]) {
      throw std::invalid_argument("sample element " + std::to_string(f) + " listed twice");
    }
    phase.in_sample[static_cast<size_t>(f)] = 1;
  }
  std::sort(phase.sample.begin(), phase.sample.end(), instance.ordering());
  return phase;
}

SamplePhase draw_sample_phase(const Instance& instance, Rng& rng) {
  std::vector<ElementId> sampled;
  for (ElementId f = 0; f < instance.n(); ++f) {
    if (rng.bernoulli(0.5)) sampled.push_back(f);
  }
  return make_sample_phase(instance, sampled);
}

std::vector<std::vector<ElementId>> RevealSchedule::layer_sets() const {
  std::vector<std::vector<ElementId>> sets(static_cast<size_t>(m));
  for (ElementId f = 0; f < static_cast<ElementId>(layer.size()); ++f) {
    const int l = layer[static_cast<size_t>(f)];
    if (l >= 1 && l <= m) sets[static_cast<size_t>(l - 1)].push_back(f);
  }
  return sets;
}

std::vector<ElementId> RevealSchedule::tail() const {
  std::vector<ElementId> result;
  for (ElementId f = 0; f < static_cast<ElementId>(layer.size()); ++f) {
    if (layer[static_cast<size_t>(f)] == m + 1) result.push_back(f);
  }
  return result;
}

RevealSchedule reveal_schedule(const Instance& instance, const SamplePhase& phase) {
  RevealSchedule schedule;
  schedule.m = phase.m();
  schedule.layer = instance.matroid().span_layers(phase.sample);
  schedule.order.reserve(static_cast<size_t>(instance.n() - phase.m()));
  for (ElementId f = 0; f < instance.n(); ++f) {
    if (!phase.in_sample[static_cast<size_t>(f)]) schedule.order.push_back(f);
  }
  // Layer by layer, ids ascending inside a layer, the unspanned tail last.
  std::stable_sort(schedule.order.begin(), schedule.order.end(), [&](ElementId a, ElementId b) {
    return schedule.layer[static_cast<size_t>(a)] < schedule.layer[static_cast<size_t>(b)];
  });
  return schedule;
}

bool is_good(const Instance& instance, const SamplePhase& phase, const RevealSchedule& schedule,
             ElementId f) {
  const int l = schedule.layer[static_cast<size_t>(f)];
  if (l == schedule.m + 1) return true;  // never spanned by the sample
  // Spanned first by the l-th prefix: f improves on the sample optimum iff
  // it outweighs the l-th strongest sample element.
  return instance.heavier(f, phase.sample[static_cast<size_t>(l - 1)]);
}

std::vector<ElementId> run_free_order(const Instance& instance, const SamplePhase& phase,
                                      Phase2Order order, Rng* rng) {
  const RevealSchedule schedule = reveal_schedule(instance, phase);

  std::vector<ElementId> draw_order;
  switch (order) {
    case Phase2Order::kDefault:
    case Phase2Order::kSchedule:
      draw_order = schedule.order;
      break;
    case Phase2Order::kRandom: {
      if (rng == nullptr) {
        throw ValidationError(ValidationIssue::kInvalidParams,
                              "random phase-2 order needs an rng");
      }
      draw_order = schedule.order;
      std::sort(draw_order.begin(), draw_order.end());
      rng->shuffle(draw_order);
      break;
    }
    case Phase2Order::kIdAscending:
      draw_order = schedule.order;
      std::sort(draw_order.begin(), draw_order.end());
      break;
    case Phase2Order::kReversed:
      draw_order = schedule.order;
      std::sort(draw_order.begin(), draw_order.end(), std::greater<>());
      break;
    case Phase2Order::kOptLast: {
      std::vector<std::uint8_t> in_opt(static_cast<size_t>(instance.n()), 0);
      for (ElementId f : greedy_opt(instance)) in_opt[static_cast<size_t>(f)] = 1;
      draw_order = schedule.order;
      std::sort(draw_order.begin(), draw_order.end());
      std::stable_partition(draw_order.begin(), draw_order.end(),
                            [&](ElementId f) { return !in_opt[static_cast<size_t>(f)]; });
      break;
    }
  }

  auto state = instance.matroid().make_state();
  std::vector<ElementId> picked;
  for (ElementId f : draw_order) {
    if (is_good(instance, phase, schedule, f) && state->can_add(f)) {
      state->add(f);
      picked.push_back(f);
    }
  }
  return picked;
}

std::vector<ElementId> run_free_order(const Instance& instance, Rng& rng, Phase2Order order) {
  const SamplePhase phase = draw_sample_phase(instance, rng);
  return run_free_order(instance, phase, order, &rng);
}

std::vector<ElementId> run_free_order_with_order(const Instance& instance,
                                                 const SamplePhase& phase,
                                                 std::span<const ElementId> draw_order) {
  const RevealSchedule schedule = reveal_schedule(instance, phase);
  auto state = instance.matroid().make_state();
  std::vector<ElementId> picked;
  for (ElementId f : draw_order) {
    if (is_good(instance, phase, schedule, f) && state->can_add(f)) {
      state->add(f);
      picked.push_back(f);
    }
  }
  return picked;
}

JIndices j_indices(const Instance& instance, std::span<const std::uint8_t> in_sample,
                   ElementId f) {
  if (f < 0 || f >= instance.n()) {
    throw std::out_of_range("j_indices: element outside ground set");
  }
  JIndices result;
  auto sampled_side = instance.matroid().make_state();
  auto unsampled_side = instance.matroid().make_state();
  const auto& order = instance.weight_order();
  for (int j = 1; j <= instance.n(); ++j) {
    const ElementId e = order[static_cast<size_t>(j - 1)];
    if (e == f) continue;
    if (in_sample[static_cast<size_t>(e)]) {
      if (sampled_side->can_add(e)) sampled_side->add(e);
      if (result.j1 == JIndices::kInfinity && !sampled_side->can_add(f)) result.j1 = j;
    } else {
      if (unsampled_side->can_add(e)) unsampled_side->add(e);
      if (result.j2 == JIndices::kInfinity && !unsampled_side->can_add(f)) result.j2 = j;
    }
  }
  return result;
}

}  // namespace matsec

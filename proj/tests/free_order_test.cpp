#include <doctest.h>

#include <algorithm>
#include <cstdint>

#include "matsec/exact_oracle.hpp"
#include "matsec/free_order.hpp"
#include "matsec/greedy.hpp"

#include "suite.hpp"
#include "test_util.hpp"

using namespace matsec;
using namespace testutil;

namespace {

std::vector<ElementId> sorted(std::vector<ElementId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("sample phase basics") {
  SUBCASE("empty ground set") {
    const Instance instance = free_matroid({});
    Rng rng(1);
    const SamplePhase phase = draw_sample_phase(instance, rng);
    CHECK(phase.m() == 0);
    CHECK(run_free_order(instance, phase).empty());
  }
  SUBCASE("forcing the whole ground set leaves nothing to draw") {
    const Instance instance = small_laminar();
    const SamplePhase phase = make_sample_phase(instance, std::vector<ElementId>{0, 1, 2, 3});
    const RevealSchedule schedule = reveal_schedule(instance, phase);
    CHECK(schedule.order.empty());
    CHECK(run_free_order(instance, phase).empty());
  }
  SUBCASE("sample sizes are Binomial(n, 1/2)") {
    const Instance instance = free_matroid(std::vector<double>(20, 1.0));
    double total = 0.0;
    const int draws = 100000;
    for (int s = 0; s < draws; ++s) {
      Rng rng = Rng::for_trial(424242, static_cast<std::uint64_t>(s));
      total += draw_sample_phase(instance, rng).m();
    }
    const double mean = total / draws;
    const double three_sigma = 3.0 * std::sqrt(20.0 * 0.25 / draws);
    CHECK(std::abs(mean - 10.0) <= three_sigma);
  }
}

TEST_CASE("reveal schedule on the rank-1 pair") {
  const Instance instance = tiny_rank1();
  SUBCASE("sampling the light element spans the heavy one") {
    const SamplePhase phase = make_sample_phase(instance, std::vector<ElementId>{1});
    const RevealSchedule schedule = reveal_schedule(instance, phase);
    REQUIRE(schedule.m == 1);
    CHECK(schedule.layer_sets() == std::vector<std::vector<ElementId>>{{0}});
    CHECK(schedule.tail().empty());
  }
  SUBCASE("empty sample puts everything in the tail") {
    const SamplePhase phase = make_sample_phase(instance, {});
    const RevealSchedule schedule = reveal_schedule(instance, phase);
    CHECK(schedule.layer_sets().empty());
    CHECK(schedule.tail() == std::vector<ElementId>{0, 1});
  }
}

TEST_CASE("reveal schedule layers agree with prefix spans recomputed by definition") {
  for (const Instance& instance : reference_suite()) {
    const int n = instance.n();
    if (n > 9) continue;
    Rng rng(5);
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<ElementId> sample;
      for (ElementId f = 0; f < n; ++f) {
        if (rng.bernoulli(0.5)) sample.push_back(f);
      }
      const SamplePhase phase = make_sample_phase(instance, sample);
      const RevealSchedule schedule = reveal_schedule(instance, phase);

      std::vector<int> expected(static_cast<size_t>(n), schedule.m + 1);
      for (ElementId a : phase.sample) expected[static_cast<size_t>(a)] = kInSample;
      std::vector<ElementId> prefix;
      for (int i = 1; i <= schedule.m; ++i) {
        prefix.push_back(phase.sample[static_cast<size_t>(i - 1)]);
        for (ElementId f : span_by_definition(instance.matroid(), prefix)) {
          if (!phase.in_sample[static_cast<size_t>(f)] &&
              expected[static_cast<size_t>(f)] == schedule.m + 1) {
            expected[static_cast<size_t>(f)] = i;
          }
        }
      }
      CHECK(schedule.layer == expected);
    }
  }
}

TEST_CASE("free order runs on the rank-1 pair") {
  const Instance instance = tiny_rank1();
  CHECK(run_free_order(instance, make_sample_phase(instance, std::vector<ElementId>{1})) ==
        std::vector<ElementId>{0});
  CHECK(run_free_order(instance, make_sample_phase(instance, std::vector<ElementId>{0})).empty());
}

TEST_CASE("free matroid accepts exactly the unsampled elements") {
  const Instance instance = free_matroid({5.0, 4.0, 3.0, 2.0, 1.0});
  for (std::uint32_t mask = 0; mask < 32; ++mask) {
    const SamplePhase phase = make_sample_phase(instance, mask_to_set(mask, 5));
    std::vector<ElementId> rest;
    for (ElementId f = 0; f < 5; ++f) {
      if (!(mask & (std::uint32_t{1} << f))) rest.push_back(f);
    }
    CHECK(sorted(run_free_order(instance, phase)) == rest);
  }
}

TEST_CASE("span indices on the rank-1 pair") {
  const Instance instance = tiny_rank1();
  SUBCASE("heavy element spanned by the sampled light one") {
    const SamplePhase phase = make_sample_phase(instance, std::vector<ElementId>{1});
    const JIndices ji = j_indices(instance, phase.in_sample, 0);
    CHECK(ji.j1 == 2);
    CHECK(ji.j2 == JIndices::kInfinity);
  }
  SUBCASE("element outside the span of the sample has infinite j1") {
    const Instance wide = free_matroid({3.0, 2.0, 1.0});
    const SamplePhase phase = make_sample_phase(wide, std::vector<ElementId>{1, 2});
    const JIndices ji = j_indices(wide, phase.in_sample, 0);
    CHECK(ji.j1 == JIndices::kInfinity);
  }
  SUBCASE("empty sample gives infinite j1 for every element") {
    const Instance laminar = small_laminar();
    const SamplePhase phase = make_sample_phase(laminar, {});
    for (ElementId f = 0; f < laminar.n(); ++f) {
      CHECK(j_indices(laminar, phase.in_sample, f).j1 == JIndices::kInfinity);
    }
  }
}

TEST_CASE("swapping the sample swaps the two span indices") {
  for (const Instance& instance : reference_suite()) {
    const int n = instance.n();
    if (n > 8) continue;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      const SamplePhase phase = make_sample_phase(instance, mask_to_set(mask, n));
      const std::uint32_t complement = ~mask & ((std::uint32_t{1} << n) - 1);
      const SamplePhase co_phase = make_sample_phase(instance, mask_to_set(complement, n));
      for (ElementId f = 0; f < n; ++f) {
        const JIndices a = j_indices(instance, phase.in_sample, f);
        const JIndices b = j_indices(instance, co_phase.in_sample, f);
        CHECK(a.j1 == b.j2);
        CHECK(a.j2 == b.j1);
      }
    }
  }
}

TEST_CASE("exhaustive guarantees on small instances") {
  // Selection guarantee, only-improving acceptances, independence and the
  // quarter bound, all via the enumeration oracle.
  for (const Instance& instance : {tiny_rank1(), small_laminar(), triangle()}) {
    const ExactReport report = exact_free_order(instance);
    CHECK(report.violations.empty());
    for (ElementId f : report.opt) {
      CHECK(report.selection_prob[static_cast<size_t>(f)] >= 0.25 - 1e-9);
    }
    CHECK(report.expected_weight >= report.opt_weight / 4.0 - 1e-9);
  }
}

TEST_CASE("alternative phase-2 orders still return independent sets of good elements") {
  const Instance instance = small_laminar();
  for (const Phase2Order order : {Phase2Order::kRandom, Phase2Order::kIdAscending,
                                  Phase2Order::kReversed, Phase2Order::kOptLast}) {
    for (int trial = 0; trial < 50; ++trial) {
      Rng rng = Rng::for_trial(7, static_cast<std::uint64_t>(trial));
      const std::vector<ElementId> picked = run_free_order(instance, rng, order);
      CHECK(instance.matroid().is_independent(picked));
    }
  }
}

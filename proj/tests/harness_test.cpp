#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "matsec/exact_oracle.hpp"
#include "matsec/experiment.hpp"
#include "matsec/generators.hpp"
#include "matsec/laminar_matroid.hpp"
#include "matsec/report.hpp"

#include "suite.hpp"
#include "test_util.hpp"

using namespace matsec;
using namespace testutil;

TEST_CASE("generators produce valid deterministic instances") {
  SUBCASE("uniform") {
    GeneratorParams params;
    params.kind = "uniform";
    params.n = 10;
    params.rank = 3;
    params.seed = 5;
    const Instance instance = generate_instance(params);
    CHECK(instance.n() == 10);
    std::set<double> distinct(instance.weights().begin(), instance.weights().end());
    CHECK(distinct.size() == 10);
    const Instance again = generate_instance(params);
    CHECK(again.weights() == instance.weights());
  }
  SUBCASE("laminar-random validates") {
    GeneratorParams params;
    params.kind = "laminar-random";
    params.n = 12;
    params.depth = 3;
    params.seed = 9;
    const Instance instance = generate_instance(params);
    const LaminarTree& tree = laminar_tree_of(instance);
    for (const LaminarSet& set : tree.family()) CHECK(set.capacity >= 1);
    CHECK(axiom_check(instance.matroid()).pass);
  }
  SUBCASE("laminar-clustered packs the strongest weights into the tight set") {
    GeneratorParams params;
    params.kind = "laminar-clustered";
    params.n = 12;
    params.cluster_size = 4;
    params.cluster_capacity = 1;
    params.seed = 3;
    const Instance instance = generate_instance(params);
    const LaminarTree& tree = laminar_tree_of(instance);
    // Locate the capacity-1 set and compare against the global top-4.
    std::vector<ElementId> by_weight = instance.weight_order();
    const std::set<ElementId> top4(by_weight.begin(), by_weight.begin() + 4);
    bool found = false;
    for (const LaminarSet& set : tree.family()) {
      if (set.capacity == 1 && set.members.size() == 4) {
        found = true;
        for (ElementId f : set.members) CHECK(top4.count(f) == 1);
      }
    }
    CHECK(found);
  }
  SUBCASE("unknown kind is rejected") {
    GeneratorParams params;
    params.kind = "nonsense";
    CHECK_THROWS_AS(generate_instance(params), ValidationError);
  }
}

TEST_CASE("run_trials statistics and reproducibility") {
  SUBCASE("free order on the rank-1 pair matches its exact expectation") {
    const Instance instance = tiny_rank1();
    ExperimentConfig config;
    config.algorithm = AlgorithmKind::kFreeOrder;
    config.trials = 100000;
    config.seed = 1001;
    const RunStats stats = run_trials(instance, config);
    // exact expectation 1.0, per-trial variance 1.0
    const double three_se = 3.0 / std::sqrt(static_cast<double>(config.trials));
    CHECK(std::abs(stats.mean_weight - 1.0) <= three_se);
    CHECK(stats.opt_weight == doctest::Approx(2.0));
  }
  SUBCASE("identical config implies identical statistics, any thread count") {
    const Instance instance = small_laminar();
    ExperimentConfig config;
    config.algorithm = AlgorithmKind::kLaminarImproved;
    config.trials = 4000;
    config.seed = 7;
    config.threads = 1;
    const RunStats a = run_trials(instance, config);
    config.threads = 4;
    const RunStats b = run_trials(instance, config);
    CHECK(a.mean_weight == b.mean_weight);
    CHECK(a.std_weight == b.std_weight);
    CHECK(a.selection_frequency == b.selection_frequency);
    CHECK(stats_csv(a) == stats_csv(b));  // byte-identical summary
  }
  SUBCASE("single deterministic trial repeats byte for byte") {
    const Instance instance = small_laminar();
    ExperimentConfig config;
    config.algorithm = AlgorithmKind::kLaminarSimple;
    config.trials = 1;
    config.seed = 99;
    const RunStats a = run_trials(instance, config);
    const RunStats b = run_trials(instance, config);
    CHECK(stats_csv(a) == stats_csv(b));
    CHECK(frequencies_csv(a) == frequencies_csv(b));
  }
  SUBCASE("laminar algorithms reject non-laminar instances") {
    const Instance instance = free_matroid({2.0, 1.0});
    ExperimentConfig config;
    config.algorithm = AlgorithmKind::kLaminarImproved;
    CHECK_THROWS_AS(run_trials(instance, config), ValidationError);
  }
  SUBCASE("bad parameters are rejected") {
    const Instance instance = small_laminar();
    ExperimentConfig config;
    config.algorithm = AlgorithmKind::kLaminarImproved;
    config.trials = 0;
    CHECK_THROWS_AS(run_trials(instance, config), ValidationError);
    config.trials = 10;
    config.q = 1.5;
    CHECK_THROWS_AS(run_trials(instance, config), ValidationError);
  }
}

TEST_CASE("Monte Carlo estimates sit within three standard errors of exact values") {
  const std::vector<Instance> refs = monte_carlo_refs();
  const long long trials = 100000;

  struct Case {
    size_t instance_index;
    AlgorithmKind algorithm;
  };
  const std::vector<Case> cases = {
      {0, AlgorithmKind::kFreeOrder},
      {1, AlgorithmKind::kLaminarSimple},
      {2, AlgorithmKind::kLaminarImproved},
  };

  for (const Case& c : cases) {
    const Instance& instance = refs[c.instance_index];
    ExactReport exact;
    switch (c.algorithm) {
      case AlgorithmKind::kFreeOrder:
        exact = exact_free_order(instance);
        break;
      case AlgorithmKind::kLaminarSimple:
        exact = exact_laminar(instance, LaminarAlgorithm::kSimple);
        break;
      case AlgorithmKind::kLaminarImproved:
        exact = exact_laminar(instance, LaminarAlgorithm::kImproved);
        break;
    }
    ExperimentConfig config;
    config.algorithm = c.algorithm;
    config.trials = trials;
    config.seed = 20240 + static_cast<std::uint64_t>(c.instance_index);
    const RunStats stats = run_trials(instance, config);

    const double se_mean = stats.std_weight / std::sqrt(static_cast<double>(trials));
    CHECK(std::abs(stats.mean_weight - exact.expected_weight) <= 3.0 * se_mean + 1e-12);

    for (int f = 0; f < instance.n(); ++f) {
      const double p = exact.selection_prob[static_cast<size_t>(f)];
      const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
      CHECK(std::abs(stats.selection_frequency[static_cast<size_t>(f)] - p) <= 3.0 * se + 1e-12);
    }
  }
}

TEST_CASE("adversarial order search") {
  SUBCASE("free order on the rank-1 pair loses exactly a quarter of its value") {
    // With an empty sample both elements are unspanned; presenting the light
    // one first blocks the heavy one, so the adversary turns the exact
    // expectation 1.0 into 3/4.
    const WorstOrderReport report =
        worst_phase2_order_search(tiny_rank1(), AlgorithmKind::kFreeOrder);
    CHECK(report.expected_weight == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(exact_free_order(tiny_rank1()).expected_weight == doctest::Approx(1.0));
  }
  SUBCASE("the adversary never helps") {
    for (const Instance& instance : laminar_suite()) {
      if (instance.n() > 8) continue;
      for (const auto algorithm : {AlgorithmKind::kFreeOrder, AlgorithmKind::kLaminarSimple,
                                   AlgorithmKind::kLaminarImproved}) {
        const WorstOrderReport worst = worst_phase2_order_search(instance, algorithm);
        ExactReport exact;
        switch (algorithm) {
          case AlgorithmKind::kFreeOrder:
            exact = exact_free_order(instance);
            break;
          case AlgorithmKind::kLaminarSimple:
            exact = exact_laminar(instance, LaminarAlgorithm::kSimple);
            break;
          case AlgorithmKind::kLaminarImproved:
            exact = exact_laminar(instance, LaminarAlgorithm::kImproved);
            break;
        }
        CHECK(worst.expected_weight <= exact.expected_weight + 1e-9);
      }
    }
  }
  SUBCASE("rejects large ground sets") {
    GeneratorParams params;
    params.kind = "laminar-random";
    params.n = 9;
    params.seed = 1;
    CHECK_THROWS_AS(
        worst_phase2_order_search(generate_instance(params), AlgorithmKind::kLaminarImproved),
        ValidationError);
  }
}

TEST_CASE("report emission") {
  RunStats stats;
  stats.instance_name = "demo";
  stats.algorithm = "free-order";
  stats.trials = 1;
  stats.seed = 5;
  stats.q = 0.5;
  stats.phase2_order = "schedule";
  stats.mean_weight = 1.25;
  stats.opt_weight = 2.5;
  stats.ratio = 2.0;
  stats.ci_lo = 1.25;
  stats.ci_hi = 1.25;
  stats.wall_time_sec = 0.125;

  SUBCASE("empty frequency map gives a header-only CSV") {
    CHECK(frequencies_csv(stats) == "instance,algorithm,element,frequency\n");
  }
  SUBCASE("summary row carries the ratio") {
    const std::string csv = stats_csv(stats);
    CHECK(csv.find("demo,free-order,1,5,1.25,1.25,1.25,2.5,2\n") != std::string::npos);
  }
  SUBCASE("JSON round trip reproduces the stats exactly") {
    stats.selection_frequency = {0.25, 0.75};
    const RunStats parsed = parse_stats_json(stats_json(stats));
    CHECK(parsed == stats);
  }
  SUBCASE("exact report JSON carries the accounting fields") {
    const ExactReport report = exact_free_order(tiny_rank1());
    const std::string text = exact_report_json(report);
    CHECK(text.find("selection_prob") != std::string::npos);
    CHECK(text.find("violations") != std::string::npos);
  }
}

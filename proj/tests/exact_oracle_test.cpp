#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "matsec/exact_oracle.hpp"
#include "matsec/greedy.hpp"
#include "matsec/secretary.hpp"

#include "suite.hpp"
#include "test_util.hpp"

using namespace matsec;
using namespace testutil;

namespace {

std::vector<ElementId> sorted(std::vector<ElementId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Deliberately broken set system: "independent iff |S| <= 2 or 0 in S".
// Downward closure fails, e.g. {0,1,2,3} is accepted but {1,2,3} is not.
class BrokenOracle final : public Matroid {
 public:
  explicit BrokenOracle(int n) : Matroid(n) {}
  std::string type_name() const override { return "broken"; }
  std::unique_ptr<IndependenceState> make_state() const override {
    struct State final : IndependenceState {
      const BrokenOracle* owner;
      std::vector<ElementId> current;
      explicit State(const BrokenOracle* o) : owner(o) {}
      bool can_add(ElementId f) const override {
        std::vector<ElementId> next = current;
        next.push_back(f);
        return owner->is_independent(next);
      }
      void add(ElementId f) override { current.push_back(f); }
      void reset() override { current.clear(); }
    };
    return std::make_unique<State>(this);
  }
  bool is_independent(std::span<const ElementId> s) const override {
    if (s.size() <= 2) return true;
    return std::find(s.begin(), s.end(), 0) != s.end();
  }
};

}  // namespace

TEST_CASE("brute force optimum") {
  SUBCASE("uniform keeps the top weights") {
    Instance instance({9.0, 7.0, 5.0}, std::make_shared<UniformMatroid>(3, 2), "");
    CHECK(sorted(brute_opt(instance)) == std::vector<ElementId>{0, 1});
  }
  SUBCASE("laminar example") {
    const Instance instance = small_laminar();
    const auto opt = brute_opt(instance);
    CHECK(sorted(opt) == std::vector<ElementId>{0, 2});
    CHECK(instance.weight_of(opt) == doctest::Approx(16.0));
  }
  SUBCASE("empty ground set") {
    CHECK(brute_opt(free_matroid({})).empty());
  }
  SUBCASE("ties resolve exactly like greedy") {
    GeneratorParams params;
    params.kind = "partition";
    params.n = 9;
    params.parts = 3;
    params.seed = 24;
    params.integer_weights = true;
    const Instance instance = generate_instance(params);
    CHECK(sorted(brute_opt(instance)) == sorted(greedy_opt(instance)));
  }
}

TEST_CASE("axiom check") {
  SUBCASE("uniform passes") {
    UniformMatroid matroid(5, 2);
    CHECK(axiom_check(matroid).pass);
  }
  SUBCASE("random laminar passes") {
    GeneratorParams params;
    params.kind = "laminar-random";
    params.n = 8;
    params.depth = 3;
    params.seed = 2;
    const Instance instance = generate_instance(params);
    CHECK(axiom_check(instance.matroid()).pass);
  }
  SUBCASE("the broken oracle fails with a witness") {
    BrokenOracle matroid(5);
    const AxiomCheckResult result = axiom_check(matroid);
    CHECK_FALSE(result.pass);
    CHECK_FALSE(result.witness_a.empty());
    // The witness pair really does violate the reported axiom.
    if (result.failure == "downward closure violated") {
      CHECK(matroid.is_independent(result.witness_a));
      CHECK_FALSE(matroid.is_independent(result.witness_b));
    }
  }
}

TEST_CASE("exact free order accounting") {
  SUBCASE("rank-1 pair") {
    const ExactReport report = exact_free_order(tiny_rank1());
    CHECK(report.violations.empty());
    CHECK(report.selection_prob[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(report.expected_weight == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.ratio == doctest::Approx(2.0).epsilon(1e-12));
  }
  SUBCASE("free matroid collects exactly the unsampled half") {
    const Instance instance = free_matroid({5.0, 4.0, 3.0, 2.0, 1.0});
    const ExactReport report = exact_free_order(instance);
    CHECK(report.violations.empty());
    CHECK(report.expected_weight == doctest::Approx(15.0 / 2.0).epsilon(1e-12));
    for (ElementId f = 0; f < 5; ++f) {
      CHECK(report.selection_prob[static_cast<size_t>(f)] == doctest::Approx(0.5).epsilon(1e-12));
    }
  }
  SUBCASE("laminar example clears the quarter bound") {
    const ExactReport report = exact_free_order(small_laminar());
    CHECK(report.violations.empty());
    for (ElementId f : report.opt) {
      CHECK(report.selection_prob[static_cast<size_t>(f)] >= 0.25 - 1e-9);
    }
  }
  SUBCASE("chunked enumeration is thread-count independent") {
    const Instance instance = laminar_suite().front();
    const ExactReport a = exact_free_order(instance, 1);
    const ExactReport b = exact_free_order(instance, 4);
    CHECK(a.expected_weight == b.expected_weight);
    CHECK(a.selection_prob == b.selection_prob);
  }
}

TEST_CASE("threshold rule selection distribution") {
  SUBCASE("one key is always taken") {
    const std::vector<double> keys{3.0};
    CHECK(secretary_selection_dist(keys, 0) == std::vector<double>{1.0});
  }
  SUBCASE("three keys, sample one: the maximum wins half the time") {
    const std::vector<double> keys{9.0, 5.0, 7.0};
    const auto dist = secretary_selection_dist(keys, 1);
    CHECK(dist[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(dist[0] == doctest::Approx(success_probability(1, 3)).epsilon(1e-12));
    CHECK(dist[2] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));  // middle key
    CHECK(dist[1] == doctest::Approx(0.0));                       // minimum never wins
  }
  SUBCASE("two keys, empty sample: the first arrival is taken") {
    const std::vector<double> keys{2.0, 1.0};
    const auto dist = secretary_selection_dist(keys, 0);
    CHECK(dist[0] == doctest::Approx(0.5));
    CHECK(dist[1] == doctest::Approx(0.5));
  }
  SUBCASE("enumeration refuses more than eight keys") {
    const std::vector<double> keys(9, 1.0);
    CHECK_THROWS_AS(secretary_selection_dist(keys, 2), std::invalid_argument);
  }
  SUBCASE("closed form agrees with enumeration for every m <= 8 and r") {
    for (int m = 1; m <= 8; ++m) {
      std::vector<double> keys(static_cast<size_t>(m));
      for (int i = 0; i < m; ++i) keys[static_cast<size_t>(i)] = static_cast<double>(m - i);
      for (int r = 0; r < m; ++r) {
        const auto enumerated = secretary_selection_dist(keys, r);
        const auto formula = selection_dist_by_rank(m, r);
        REQUIRE(enumerated.size() == formula.size());
        for (size_t i = 0; i < formula.size(); ++i) {
          CHECK(enumerated[i] == doctest::Approx(formula[i]).epsilon(1e-12));
        }
      }
    }
  }
  SUBCASE("the maximum's probability matches the closed-form success probability") {
    for (int m = 1; m <= 30; ++m) {
      for (int r = 0; r < m; ++r) {
        CHECK(selection_dist_by_rank(m, r)[0] ==
              doctest::Approx(success_probability(r, m)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("exact laminar accounting") {
  SUBCASE("unconstrained family raises no violations") {
    const Instance instance = flat_laminar(6, 6);
    const ExactReport report = exact_laminar(instance, LaminarAlgorithm::kImproved);
    CHECK(report.violations.empty());
    CHECK(report.transversals_checked);
  }
  SUBCASE("solitary and per-element bounds on the example") {
    const Instance instance = small_laminar();
    const ExactReport simple = exact_laminar(instance, LaminarAlgorithm::kSimple);
    CHECK(simple.violations.empty());
    for (ElementId f : simple.opt) {
      CHECK(simple.solitary_prob[static_cast<size_t>(f)] >= 2.0 / 27.0 - 1e-9);
    }
    const ExactReport improved = exact_laminar(instance, LaminarAlgorithm::kImproved);
    for (ElementId f : improved.opt) {
      CHECK(improved.z_expectation[static_cast<size_t>(f)] >= 1.0 / (3.0 * std::sqrt(3.0)) - 1e-9);
    }
  }
  SUBCASE("per-part maxima dominate the weighted per-element expectations") {
    for (const Instance& instance : laminar_suite()) {
      if (instance.n() > 10) continue;
      const ExactReport report = exact_laminar(instance, LaminarAlgorithm::kImproved);
      double z_weighted = 0.0;
      for (ElementId f : report.opt) {
        z_weighted += instance.weight(f) * report.z_expectation[static_cast<size_t>(f)];
      }
      CHECK(report.part_max_expected >= z_weighted - 1e-9);
      // The rule extracts at least 1/e of each part maximum.
      CHECK(report.expected_weight >= report.part_max_expected / std::exp(1.0) - 1e-9);
    }
  }
  SUBCASE("chunked enumeration is thread-count independent") {
    const Instance instance = small_laminar();
    const ExactReport a = exact_laminar(instance, LaminarAlgorithm::kImproved, -1.0, 1);
    const ExactReport b = exact_laminar(instance, LaminarAlgorithm::kImproved, -1.0, 3);
    CHECK(a.expected_weight == b.expected_weight);
    CHECK(a.z_expectation == b.z_expectation);
  }
  SUBCASE("q outside (0,1) is rejected") {
    CHECK_THROWS_AS(exact_laminar(small_laminar(), LaminarAlgorithm::kImproved, 1.5),
                    std::exception);
  }
}

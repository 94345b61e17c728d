#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>

#include "matsec/exact_oracle.hpp"
#include "matsec/generators.hpp"
#include "matsec/greedy.hpp"
#include "matsec/instance.hpp"
#include "matsec/laminar_matroid.hpp"
#include "matsec/rng.hpp"

#include "suite.hpp"
#include "test_util.hpp"

using namespace matsec;
using namespace testutil;

namespace {

std::vector<ElementId> sorted(std::vector<ElementId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Instance two_set_laminar() {
  // {0,1} capacity 1 under a root {0,1,2,3} capacity 4.
  std::vector<LaminarSet> family{{{0, 1}, 1}, {{0, 1, 2, 3}, 4}};
  return Instance({4.0, 3.0, 2.0, 1.0},
                  std::make_shared<LaminarMatroid>(LaminarTree::build(4, family)), "two-set");
}

}  // namespace

TEST_CASE("empty set is independent in every matroid") {
  for (const Instance& instance : reference_suite()) {
    CHECK(instance.matroid().is_independent({}));
  }
}

TEST_CASE("laminar capacity bound rejects oversized intersections") {
  std::vector<LaminarSet> family{{{0, 1, 2}, 2}, {{0, 1, 2, 3, 4}, 5}};
  LaminarMatroid matroid(LaminarTree::build(5, family));
  const std::vector<ElementId> all{0, 1, 2};
  CHECK_FALSE(matroid.is_independent(all));
  CHECK(matroid.is_independent(std::vector<ElementId>{0, 2}));
}

TEST_CASE("graphic matroid rejects cycles") {
  const Instance instance = triangle();
  CHECK_FALSE(instance.matroid().is_independent(std::vector<ElementId>{0, 1, 2}));
  CHECK(instance.matroid().is_independent(std::vector<ElementId>{0, 1}));
}

TEST_CASE("rank examples") {
  UniformMatroid uniform(4, 2);
  CHECK(uniform.rank(std::vector<ElementId>{0, 1, 3}) == 2);

  const Instance laminar = two_set_laminar();
  CHECK(laminar.matroid().rank(std::vector<ElementId>{0, 1}) == 1);

  const Instance graphic = triangle();
  CHECK(graphic.matroid().rank(std::vector<ElementId>{0, 1, 2}) == 2);
}

TEST_CASE("span examples") {
  UniformMatroid uniform(4, 2);
  CHECK(uniform.span(std::vector<ElementId>{0, 1}) == std::vector<ElementId>{0, 1, 2, 3});

  const Instance laminar = two_set_laminar();
  CHECK(laminar.matroid().span(std::vector<ElementId>{0}) == std::vector<ElementId>{0, 1});

  // Graphic span cross-checked against the rank definition.
  const Instance graphic = triangle();
  const std::vector<ElementId> expected =
      span_by_definition(graphic.matroid(), std::vector<ElementId>{0, 1});
  CHECK(graphic.matroid().span(std::vector<ElementId>{0, 1}) == expected);
  CHECK(expected == std::vector<ElementId>{0, 1, 2});
}

TEST_CASE("span and rank agree with the rank-definition fallback") {
  for (const Instance& instance : reference_suite()) {
    if (instance.n() > 10) continue;
    Rng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<ElementId> s;
      for (ElementId f = 0; f < instance.n(); ++f) {
        if (rng.bernoulli(0.4)) s.push_back(f);
      }
      CHECK(instance.matroid().rank(s) == rank_by_definition(instance.matroid(), s));
      CHECK(instance.matroid().span(s) == span_by_definition(instance.matroid(), s));
    }
  }
}

TEST_CASE("greedy matches brute force") {
  SUBCASE("uniform top-2") {
    Instance instance({9.0, 7.0, 5.0}, std::make_shared<UniformMatroid>(3, 2), "");
    CHECK(greedy_opt(instance) == std::vector<ElementId>{0, 1});
  }
  SUBCASE("laminar example, all 16 subsets") {
    const Instance instance = small_laminar();
    const std::vector<ElementId> expected = brute_force_opt_distinct(instance);
    CHECK(sorted(greedy_opt(instance)) == sorted(expected));
    CHECK(sorted(expected) == std::vector<ElementId>{0, 2});
    CHECK(instance.weight_of(expected) == doctest::Approx(16.0));
  }
  SUBCASE("empty restriction") {
    const Instance instance = small_laminar();
    CHECK(greedy_max_weight(instance, {}).empty());
  }
  SUBCASE("whole suite against the enumeration oracle") {
    for (const Instance& instance : reference_suite()) {
      if (instance.n() > 12) continue;
      CHECK(sorted(greedy_opt(instance)) == sorted(brute_opt(instance)));
    }
  }
}

TEST_CASE("sample optimum extends the global optimum restricted to the sample") {
  // OPT ∩ A ⊆ greedy(A) for every subset A.
  for (const Instance& instance : reference_suite()) {
    const int n = instance.n();
    if (n > 10) continue;
    const std::vector<ElementId> opt = greedy_opt(instance);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      const std::vector<ElementId> sample = mask_to_set(mask, n);
      const std::vector<ElementId> opt_a = sorted(greedy_max_weight(instance, sample));
      for (ElementId f : opt) {
        if (mask & (std::uint32_t{1} << f)) {
          CHECK(std::binary_search(opt_a.begin(), opt_a.end(), f));
        }
      }
    }
  }
}

TEST_CASE("rank is bounded, monotone and submodular; span is a closure") {
  GeneratorParams params;
  params.kind = "laminar-random";
  params.n = 7;
  params.depth = 2;
  params.seed = 5;
  for (const Instance& instance :
       {generate_instance(params), triangle(), small_laminar(), free_matroid({1, 2, 3, 4})}) {
    const Matroid& matroid = instance.matroid();
    const int n = matroid.size();
    const std::uint32_t total = std::uint32_t{1} << n;
    std::vector<int> rank_of(total);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      const auto s = mask_to_set(mask, n);
      rank_of[mask] = matroid.rank(s);
      CHECK(rank_of[mask] <= static_cast<int>(s.size()));

      const std::vector<ElementId> sp = matroid.span(s);
      // S ⊆ span(S), rank(span(S)) = rank(S), span(span(S)) = span(S).
      for (ElementId f : s) CHECK(std::binary_search(sp.begin(), sp.end(), f));
      CHECK(matroid.rank(sp) == rank_of[mask]);
      CHECK(matroid.span(sp) == sp);
    }
    for (std::uint32_t a = 0; a < total; ++a) {
      for (std::uint32_t b = a; b; b = (b - 1) & a) {
        CHECK(rank_of[b] <= rank_of[a]);  // monotonicity on subsets
      }
    }
    for (std::uint32_t a = 0; a < total; ++a) {
      for (std::uint32_t b = 0; b < total; ++b) {
        CHECK(rank_of[a | b] + rank_of[a & b] <= rank_of[a] + rank_of[b]);
      }
    }
  }
}

TEST_CASE("validation rejects crossing families") {
  RawInstance raw;
  raw.n = 3;
  raw.weights = {1.0, 1.0, 1.0};
  raw.matroid_type = "laminar";
  raw.laminar_sets = {{{0, 1}, 1}, {{1, 2}, 1}};
  CHECK_THROWS_WITH_AS(validate_instance(raw), doctest::Contains("cross"), ValidationError);
  try {
    validate_instance(raw);
  } catch (const ValidationError& e) {
    CHECK(e.issue() == ValidationIssue::kCrossingSets);
  }
}

TEST_CASE("validation adds a root when missing") {
  RawInstance raw;
  raw.n = 4;
  raw.weights = {4.0, 3.0, 2.0, 1.0};
  raw.matroid_type = "laminar";
  raw.laminar_sets = {{{0, 1}, 1}};
  const Instance instance = validate_instance(raw);
  const LaminarTree& tree = laminar_tree_of(instance);
  CHECK(tree.node(tree.root()).capacity == 4);
  CHECK(tree.members_of(tree.root()).size() == 4);
}

TEST_CASE("capacity-0 sets remove their elements and renumber the rest") {
  RawInstance raw;
  raw.n = 5;
  raw.weights = {5.0, 4.0, 3.0, 2.0, 1.0};
  raw.matroid_type = "laminar";
  raw.laminar_sets = {{{0, 1, 2, 3, 4}, 3}, {{3, 4}, 0}};
  const Instance instance = validate_instance(raw);
  CHECK(instance.n() == 3);
  CHECK(instance.removed_elements == std::vector<ElementId>{3, 4});
  CHECK(instance.id_remap == std::vector<int>{0, 1, 2, -1, -1});
  CHECK(instance.weights() == std::vector<double>{5.0, 4.0, 3.0});
}

TEST_CASE("validation error catalogue") {
  RawInstance raw;
  raw.n = 2;
  raw.weights = {1.0, -0.5};
  raw.matroid_type = "uniform";
  raw.uniform_rank = 1;
  CHECK_THROWS_AS(validate_instance(raw), ValidationError);  // negative weight

  raw.weights = {1.0};
  CHECK_THROWS_AS(validate_instance(raw), ValidationError);  // length mismatch

  raw.weights = {1.0, 2.0};
  raw.matroid_type = "laminar";
  raw.laminar_sets = {{{0, 7}, 1}};
  CHECK_THROWS_AS(validate_instance(raw), ValidationError);  // dangling id

  raw.laminar_sets.clear();
  raw.matroid_type = "graphic";
  raw.edges = {{0, 0}, {0, 1}};
  CHECK_THROWS_AS(validate_instance(raw), ValidationError);  // self-loop
}

TEST_CASE("instance JSON round trip") {
  for (const Instance& instance : reference_suite()) {
    const Instance parsed = parse_instance(instance_to_json(instance));
    CHECK(parsed.n() == instance.n());
    CHECK(parsed.weights() == instance.weights());
    CHECK(parsed.matroid().type_name() == instance.matroid().type_name());
    // Same independent sets on a sample of subsets.
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<ElementId> s;
      for (ElementId f = 0; f < instance.n(); ++f) {
        if (rng.bernoulli(0.5)) s.push_back(f);
      }
      CHECK(parsed.matroid().is_independent(s) == instance.matroid().is_independent(s));
    }
  }
}

TEST_CASE("nested laminar JSON form flattens to the same matroid") {
  const std::string text = R"({
    "n": 4,
    "weights": [4, 3, 2, 1],
    "matroid": {
      "type": "laminar",
      "sets": [
        {"capacity": 2, "children": [
          {"capacity": 1, "members": [0, 1]},
          {"capacity": 2, "members": [2, 3]}
        ]}
      ]
    }
  })";
  const Instance instance = parse_instance(text);
  CHECK(instance.matroid().is_independent(std::vector<ElementId>{0, 2}));
  CHECK_FALSE(instance.matroid().is_independent(std::vector<ElementId>{0, 1}));
  CHECK_FALSE(instance.matroid().is_independent(std::vector<ElementId>{0, 2, 3}));
}

TEST_CASE("consecutive layout keeps every laminar set contiguous") {
  GeneratorParams params;
  params.kind = "laminar-random";
  params.n = 50;
  params.depth = 4;
  params.seed = 17;
  const Instance instance = generate_instance(params);
  const LaminarTree& tree = laminar_tree_of(instance);
  for (const LaminarSet& set : tree.family()) {
    int lo = instance.n(), hi = -1;
    for (ElementId f : set.members) {
      lo = std::min(lo, tree.position()[static_cast<size_t>(f)]);
      hi = std::max(hi, tree.position()[static_cast<size_t>(f)]);
    }
    CHECK(hi - lo + 1 == static_cast<int>(set.members.size()));
  }
}

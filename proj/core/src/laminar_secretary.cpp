#include "matsec/laminar_secretary.hpp"

#include <algorithm>
#include <numeric>

#include "matsec/greedy.hpp"
#include "matsec/laminar_matroid.hpp"
#include "matsec/secretary.hpp"

namespace matsec {

namespace {

void index_parts(int n, PartitionScheme& scheme) {
  scheme.part_of.assign(static_cast<size_t>(n), -1);
  for (size_t p = 0; p < scheme.parts.size(); ++p) {
    for (ElementId f : scheme.parts[p]) scheme.part_of[static_cast<size_t>(f)] = static_cast<int>(p);
  }
}

std::vector<int> anchor_positions(const LaminarTree& tree, std::span<const ElementId> anchors) {
  std::vector<int> positions;
  positions.reserve(anchors.size());
  for (ElementId f : anchors) positions.push_back(tree.position()[static_cast<size_t>(f)]);
  std::sort(positions.begin(), positions.end());
  return positions;
}

}  // namespace

OddEvenFamilies odd_even_parts(const Instance& instance, std::span<const std::uint8_t> in_sample,
                               std::span<const ElementId> opt_a) {
  const LaminarTree& tree = laminar_tree_of(instance);
  if (opt_a.empty()) {
    throw ValidationError(ValidationIssue::kInvalidParams,
                          "odd_even_parts: empty sample optimum, use the whole scheme");
  }
  const int n = instance.n();
  const std::vector<int> anchors = anchor_positions(tree, opt_a);
  const int p = static_cast<int>(anchors.size());

  OddEvenFamilies families;
  families.odd.source = PartitionScheme::Source::kOdd;
  families.even.source = PartitionScheme::Source::kEven;

  // Gap j spans the positions between anchors j-1 and j, endpoints included;
  // the anchors themselves are sampled, so subtracting the sample leaves the
  // open gaps. Empty parts are dropped.
  for (int j = 1; j <= p + 1; ++j) {
    const int lo = j == 1 ? 0 : anchors[static_cast<size_t>(j - 2)];
    const int hi = j == p + 1 ? n - 1 : anchors[static_cast<size_t>(j - 1)];
    std::vector<ElementId> part;
    for (int pos = lo; pos <= hi; ++pos) {
      const ElementId f = tree.order()[static_cast<size_t>(pos)];
      if (!in_sample[static_cast<size_t>(f)]) part.push_back(f);
    }
    if (part.empty()) continue;
    (j % 2 == 1 ? families.odd : families.even).parts.push_back(std::move(part));
  }
  index_parts(n, families.odd);
  index_parts(n, families.even);
  return families;
}

PartitionScheme interval_partition(const Instance& instance, std::span<const ElementId> anchors) {
  const LaminarTree& tree = laminar_tree_of(instance);
  const int n = instance.n();
  if (!instance.matroid().is_independent(anchors)) {
    throw ValidationError(ValidationIssue::kInvalidParams,
                          "interval_partition: anchors must form an independent set");
  }

  PartitionScheme scheme;
  scheme.source = PartitionScheme::Source::kInterval;
  if (anchors.empty()) {
    std::vector<ElementId> all(static_cast<size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    if (!all.empty()) scheme.parts.push_back(std::move(all));
    index_parts(n, scheme);
    return scheme;
  }

  const std::vector<int> apos = anchor_positions(tree, anchors);
  scheme.parts.resize(apos.size());

  for (int pos = 0; pos < n; ++pos) {
    const ElementId f = tree.order()[static_cast<size_t>(pos)];
    // Smallest set containing f that holds an anchor; the root always does.
    int v = tree.deepest_node_of(f);
    const LaminarTree::Node* node = &tree.node(v);
    while (true) {
      const auto lower = std::lower_bound(apos.begin(), apos.end(), node->begin);
      if (lower != apos.end() && *lower < node->end) break;
      v = node->parent;
      node = &tree.node(v);
    }
    // Nearest anchor inside that set, preferring the one at or before pos.
    auto after = std::upper_bound(apos.begin(), apos.end(), pos);
    size_t anchor_index;
    if (after != apos.begin() && *(after - 1) >= node->begin) {
      anchor_index = static_cast<size_t>((after - 1) - apos.begin());
    } else {
      anchor_index = static_cast<size_t>(after - apos.begin());
    }
    scheme.parts[anchor_index].push_back(f);
  }
  index_parts(n, scheme);
  return scheme;
}

PartitionScheme whole_scheme(const Instance& instance, std::span<const std::uint8_t> in_sample) {
  PartitionScheme scheme;
  scheme.source = PartitionScheme::Source::kWhole;
  std::vector<ElementId> rest;
  for (ElementId f = 0; f < instance.n(); ++f) {
    if (!in_sample[static_cast<size_t>(f)]) rest.push_back(f);
  }
  if (!rest.empty()) scheme.parts.push_back(std::move(rest));
  index_parts(instance.n(), scheme);
  return scheme;
}

PartitionScheme improved_scheme(const Instance& instance, std::span<const std::uint8_t> in_sample,
                                std::span<const ElementId> opt_a) {
  PartitionScheme base = interval_partition(instance, opt_a);
  PartitionScheme scheme;
  scheme.source = base.source;
  for (auto& part : base.parts) {
    std::vector<ElementId> kept;
    for (ElementId f : part) {
      if (!in_sample[static_cast<size_t>(f)]) kept.push_back(f);
    }
    if (!kept.empty()) scheme.parts.push_back(std::move(kept));
  }
  index_parts(instance.n(), scheme);
  return scheme;
}

PartitionScheme simple_scheme(const Instance& instance, std::span<const std::uint8_t> in_sample,
                              std::span<const ElementId> opt_a, bool pick_odd) {
  if (opt_a.empty()) return whole_scheme(instance, in_sample);
  OddEvenFamilies families = odd_even_parts(instance, in_sample, opt_a);
  return pick_odd ? std::move(families.odd) : std::move(families.even);
}

std::vector<ElementId> run_scheme_phase2(const Instance& instance, const PartitionScheme& scheme,
                                         std::span<const ElementId> arrivals) {
  std::vector<ThresholdRule> rules;
  rules.reserve(scheme.parts.size());
  for (const auto& part : scheme.parts) {
    rules.emplace_back(static_cast<int>(part.size()), instance.ordering());
  }
  std::vector<ElementId> chosen;
  for (ElementId f : arrivals) {
    const int p = scheme.part_of[static_cast<size_t>(f)];
    if (p < 0) continue;  // observed and discarded
    if (auto selected = rules[static_cast<size_t>(p)].feed(f)) chosen.push_back(*selected);
  }
  return chosen;
}

namespace {

void reorder_phase2(const Instance& instance, std::vector<ElementId>& arrivals,
                    Phase2Order order) {
  switch (order) {
    case Phase2Order::kDefault:
    case Phase2Order::kRandom:
      return;  // the permutation is already uniform
    case Phase2Order::kSchedule:
      throw ValidationError(ValidationIssue::kInvalidParams,
                            "schedule order applies to the free order procedure only");
    case Phase2Order::kIdAscending:
      std::sort(arrivals.begin(), arrivals.end());
      return;
    case Phase2Order::kReversed:
      std::sort(arrivals.begin(), arrivals.end(), std::greater<>());
      return;
    case Phase2Order::kOptLast: {
      std::vector<std::uint8_t> in_opt(static_cast<size_t>(instance.n()), 0);
      for (ElementId f : greedy_opt(instance)) in_opt[static_cast<size_t>(f)] = 1;
      std::sort(arrivals.begin(), arrivals.end());
      std::stable_partition(arrivals.begin(), arrivals.end(),
                            [&](ElementId f) { return !in_opt[static_cast<size_t>(f)]; });
      return;
    }
  }
}

std::vector<ElementId> run_laminar(const Instance& instance, Rng& rng, double q, bool simple,
                                   Phase2Order order, LaminarRun* out) {
  laminar_tree_of(instance);  // algorithm/matroid compatibility
  if (!(q > 0.0 && q < 1.0)) {
    throw ValidationError(ValidationIssue::kInvalidParams,
                          "sampling probability must lie in (0, 1)");
  }
  const int n = instance.n();
  std::vector<ElementId> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  const int k = rng.binomial(n, q);

  std::vector<std::uint8_t> in_sample(static_cast<size_t>(n), 0);
  std::vector<ElementId> sample(perm.begin(), perm.begin() + k);
  for (ElementId f : sample) in_sample[static_cast<size_t>(f)] = 1;

  const std::vector<ElementId> opt_a = greedy_max_weight(instance, sample);

  PartitionScheme scheme;
  if (simple) {
    const bool pick_odd = opt_a.empty() ? true : rng.bernoulli(0.5);
    scheme = simple_scheme(instance, in_sample, opt_a, pick_odd);
  } else {
    scheme = improved_scheme(instance, in_sample, opt_a);
  }

  std::vector<ElementId> arrivals(perm.begin() + k, perm.end());
  reorder_phase2(instance, arrivals, order);
  std::vector<ElementId> chosen = run_scheme_phase2(instance, scheme, arrivals);

  if (out != nullptr) {
    out->sample = std::move(sample);
    out->opt_a = opt_a;
    out->scheme = std::move(scheme);
    out->chosen = chosen;
  }
  return chosen;
}

}  // namespace

std::vector<ElementId> run_simple_laminar(const Instance& instance, Rng& rng, Phase2Order order,
                                          LaminarRun* out) {
  return run_laminar(instance, rng, kSimpleSampleProb, /*simple=*/true, order, out);
}

std::vector<ElementId> run_improved_laminar(const Instance& instance, Rng& rng, double q,
                                            Phase2Order order, LaminarRun* out) {
  return run_laminar(instance, rng, q, /*simple=*/false, order, out);
}

}  // namespace matsec

#include "matsec/generators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "matsec/graphic_matroid.hpp"
#include "matsec/laminar_matroid.hpp"
#include "matsec/rng.hpp"

namespace matsec {

namespace {

std::vector<double> draw_weights(int n, Rng& rng, bool integer_weights) {
  std::vector<double> weights(static_cast<size_t>(n));
  for (double& w : weights) {
    w = integer_weights ? static_cast<double>(1 + rng.below(5)) : rng.next_unit();
  }
  return weights;
}

// Splits [0, n) into `pieces` nonempty contiguous ranges.
std::vector<std::pair<int, int>> random_composition(int n, int pieces, Rng& rng) {
  std::vector<int> cuts{0, n};
  while (static_cast<int>(cuts.size()) - 1 < pieces) {
    const int c = 1 + rng.below(n - 1);
    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::pair<int, int>> ranges;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) ranges.emplace_back(cuts[i], cuts[i + 1]);
  return ranges;
}

void grow_laminar_sets(int lo, int hi, int depth, Rng& rng,
                       const std::vector<ElementId>& relabel, std::vector<LaminarSet>& out) {
  if (depth <= 0 || hi - lo < 2) return;
  const int pieces = std::min(hi - lo, 2 + rng.below(2));
  for (const auto& [a, b] : random_composition(hi - lo, pieces, rng)) {
    const int sub_lo = lo + a;
    const int sub_hi = lo + b;
    if (rng.bernoulli(0.8)) {
      LaminarSet set;
      for (int p = sub_lo; p < sub_hi; ++p) set.members.push_back(relabel[static_cast<size_t>(p)]);
      set.capacity = 1 + rng.below(sub_hi - sub_lo);
      out.push_back(std::move(set));
      grow_laminar_sets(sub_lo, sub_hi, depth - 1, rng, relabel, out);
    }
  }
}

}  // namespace

Instance generate_instance(const GeneratorParams& params) {
  const int n = params.n;
  if (n < 0) throw ValidationError(ValidationIssue::kInvalidParams, "generator: n must be >= 0");
  Rng rng(splitmix64(params.seed) ^ std::hash<std::string>{}(params.kind));

  const std::string label =
      params.kind + "-n" + std::to_string(n) + "-s" + std::to_string(params.seed);

  if (params.kind == "uniform") {
    const int k = params.rank > 0 ? params.rank : std::max(1, n / 3);
    return Instance(draw_weights(n, rng, params.integer_weights),
                    std::make_shared<UniformMatroid>(n, n == 0 ? 0 : k), label);
  }

  if (params.kind == "partition") {
    const int pieces = std::min(n, params.parts > 0 ? params.parts : std::max(1, n / 3));
    std::vector<ElementId> ids(static_cast<size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    rng.shuffle(ids);
    std::vector<std::vector<ElementId>> parts;
    std::vector<int> capacities;
    for (const auto& [a, b] : random_composition(n, pieces, rng)) {
      parts.emplace_back(ids.begin() + a, ids.begin() + b);
      capacities.push_back(1 + rng.below(b - a));
    }
    return Instance(draw_weights(n, rng, params.integer_weights),
                    std::make_shared<PartitionMatroid>(n, std::move(parts), std::move(capacities)),
                    label);
  }

  if (params.kind == "graphic-random") {
    const int vertices = params.vertices > 1 ? params.vertices : std::max(2, (2 * n + 2) / 3);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
      const int u = rng.below(vertices);
      int v = rng.below(vertices - 1);
      if (v >= u) ++v;
      edges.emplace_back(u, v);
    }
    return Instance(draw_weights(n, rng, params.integer_weights),
                    std::make_shared<GraphicMatroid>(vertices, std::move(edges)), label);
  }

  if (params.kind == "laminar-random") {
    std::vector<ElementId> relabel(static_cast<size_t>(n));
    std::iota(relabel.begin(), relabel.end(), 0);
    rng.shuffle(relabel);  // sets need not be id-contiguous
    std::vector<LaminarSet> family;
    if (n > 0) {
      LaminarSet root;
      root.members = relabel;
      root.capacity = 1 + rng.below(std::max(1, n));
      family.push_back(std::move(root));
      grow_laminar_sets(0, n, params.depth, rng, relabel, family);
    }
    return Instance(draw_weights(n, rng, params.integer_weights),
                    std::make_shared<LaminarMatroid>(LaminarTree::build(n, std::move(family))),
                    label);
  }

  if (params.kind == "laminar-clustered") {
    const int cluster = std::min(n, std::max(1, params.cluster_size));
    const int capacity = std::max(1, params.cluster_capacity);
    std::vector<ElementId> ids(static_cast<size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    rng.shuffle(ids);
    // Geometrically decaying weights, the strongest packed into one
    // capacity-limited set.
    std::vector<double> weights(static_cast<size_t>(n), 0.0);
    for (int r = 0; r < n; ++r) {
      weights[static_cast<size_t>(ids[static_cast<size_t>(r)])] = std::pow(0.5, r);
    }
    std::vector<LaminarSet> family;
    LaminarSet dense;
    dense.members.assign(ids.begin(), ids.begin() + cluster);
    dense.capacity = capacity;
    if (n > 0) family.push_back(std::move(dense));
    return Instance(std::move(weights),
                    std::make_shared<LaminarMatroid>(LaminarTree::build(n, std::move(family))),
                    label);
  }

  throw ValidationError(ValidationIssue::kInvalidParams,
                        "unknown generator kind '" + params.kind + "'");
}

}  // namespace matsec

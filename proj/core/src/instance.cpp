#include "matsec/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "matsec/graphic_matroid.hpp"
#include "matsec/laminar_matroid.hpp"

namespace matsec {

Instance::Instance(std::vector<double> weights, std::shared_ptr<const Matroid> matroid,
                   std::string name)
    : weights_(std::move(weights)), matroid_(std::move(matroid)), name_(std::move(name)) {
  if (!matroid_ || matroid_->size() != static_cast<int>(weights_.size())) {
    throw ValidationError(ValidationIssue::kDanglingElement,
                          "instance: weights and matroid ground set sizes differ");
  }
  weight_order_.resize(weights_.size());
  std::iota(weight_order_.begin(), weight_order_.end(), 0);
  std::sort(weight_order_.begin(), weight_order_.end(), ordering());
  weight_rank_.resize(weights_.size());
  for (size_t i = 0; i < weight_order_.size(); ++i) {
    weight_rank_[static_cast<size_t>(weight_order_[i])] = static_cast<int>(i);
  }
}

double Instance::weight_of(std::span<const ElementId> s) const {
  double total = 0.0;
  for (ElementId f : s) total += weight(f);
  return total;
}

const LaminarTree& laminar_tree_of(const Instance& instance) {
  const auto* laminar = dynamic_cast<const LaminarMatroid*>(&instance.matroid());
  if (laminar == nullptr) {
    throw ValidationError(ValidationIssue::kInvalidParams,
                          "operation requires a laminar instance, got matroid type '" +
                              instance.matroid().type_name() + "'");
  }
  return laminar->tree();
}

namespace {

void check_weights(int n, const std::vector<double>& weights) {
  if (static_cast<int>(weights.size()) != n) {
    throw ValidationError(ValidationIssue::kDanglingElement,
                          "instance declares n=" + std::to_string(n) + " but has " +
                              std::to_string(weights.size()) + " weights");
  }
  for (double w : weights) {
    if (std::isnan(w)) {
      throw ValidationError(ValidationIssue::kInvalidParams, "weight is NaN");
    }
    if (w < 0.0) {
      throw ValidationError(ValidationIssue::kNegativeWeight, "weights must be nonnegative");
    }
  }
}

Instance validate_laminar(const RawInstance& raw) {
  const int n = raw.n;
  for (const auto& set : raw.laminar_sets) {
    if (set.capacity < 0) {
      throw ValidationError(ValidationIssue::kInvalidCapacity, "negative laminar capacity");
    }
    for (ElementId f : set.members) {
      if (f < 0 || f >= n) {
        throw ValidationError(ValidationIssue::kDanglingElement,
                              "laminar set member " + std::to_string(f) + " outside [0, " +
                                  std::to_string(n) + ")");
      }
    }
  }

  // Laminarity is judged on the family as given, before any removal.
  LaminarTree::check_laminarity(n, raw.laminar_sets);

  // A capacity-0 set forbids all of its elements; drop them and renumber.
  std::vector<std::uint8_t> removed(static_cast<size_t>(n), 0);
  for (const auto& set : raw.laminar_sets) {
    if (set.capacity == 0) {
      for (ElementId f : set.members) removed[static_cast<size_t>(f)] = 1;
    }
  }

  std::vector<int> remap(static_cast<size_t>(n), -1);
  std::vector<ElementId> removed_ids;
  std::vector<double> weights;
  int next = 0;
  for (ElementId f = 0; f < n; ++f) {
    if (removed[static_cast<size_t>(f)]) {
      removed_ids.push_back(f);
    } else {
      remap[static_cast<size_t>(f)] = next++;
      weights.push_back(raw.weights[static_cast<size_t>(f)]);
    }
  }

  std::vector<LaminarSet> family;
  for (const auto& set : raw.laminar_sets) {
    if (set.capacity == 0) continue;
    LaminarSet mapped;
    mapped.capacity = set.capacity;
    for (ElementId f : set.members) {
      if (!removed[static_cast<size_t>(f)]) mapped.members.push_back(remap[static_cast<size_t>(f)]);
    }
    if (!mapped.members.empty()) family.push_back(std::move(mapped));
  }

  auto matroid = std::make_shared<LaminarMatroid>(LaminarTree::build(next, std::move(family)));
  Instance instance(std::move(weights), std::move(matroid), raw.name);
  if (!removed_ids.empty()) {
    instance.id_remap = std::move(remap);
    instance.removed_elements = std::move(removed_ids);
  }
  return instance;
}

}  // namespace

Instance validate_instance(const RawInstance& raw) {
  if (raw.n < 0) {
    throw ValidationError(ValidationIssue::kInvalidParams, "negative ground set size");
  }
  check_weights(raw.n, raw.weights);

  if (raw.matroid_type == "uniform") {
    return Instance(raw.weights, std::make_shared<UniformMatroid>(raw.n, raw.uniform_rank),
                    raw.name);
  }
  if (raw.matroid_type == "partition") {
    std::vector<std::vector<ElementId>> parts;
    std::vector<int> capacities;
    for (const auto& part : raw.parts) {
      parts.push_back(part.members);
      capacities.push_back(part.capacity);
    }
    return Instance(raw.weights,
                    std::make_shared<PartitionMatroid>(raw.n, std::move(parts), std::move(capacities)),
                    raw.name);
  }
  if (raw.matroid_type == "graphic") {
    if (static_cast<int>(raw.edges.size()) != raw.n) {
      throw ValidationError(ValidationIssue::kDanglingElement,
                            "graphic instance: element count must equal edge count");
    }
    int vertices = raw.num_vertices;
    if (vertices < 0) {
      vertices = 0;
      for (const auto& [u, v] : raw.edges) vertices = std::max({vertices, u + 1, v + 1});
    }
    return Instance(raw.weights, std::make_shared<GraphicMatroid>(vertices, raw.edges), raw.name);
  }
  if (raw.matroid_type == "laminar") {
    return validate_laminar(raw);
  }
  throw ValidationError(ValidationIssue::kInvalidParams,
                        "unknown matroid type '" + raw.matroid_type + "'");
}

std::string to_string(Phase2Order order) {
  switch (order) {
    case Phase2Order::kDefault: return "default";
    case Phase2Order::kSchedule: return "schedule";
    case Phase2Order::kRandom: return "random";
    case Phase2Order::kIdAscending: return "adversarial-id";
    case Phase2Order::kReversed: return "reversed";
    case Phase2Order::kOptLast: return "opt-last";
  }
  return "default";
}

Phase2Order phase2_order_from_string(const std::string& name) {
  if (name == "default" || name.empty()) return Phase2Order::kDefault;
  if (name == "schedule") return Phase2Order::kSchedule;
  if (name == "random") return Phase2Order::kRandom;
  if (name == "adversarial-id" || name == "id") return Phase2Order::kIdAscending;
  if (name == "reversed") return Phase2Order::kReversed;
  if (name == "opt-last") return Phase2Order::kOptLast;
  throw ValidationError(ValidationIssue::kInvalidParams, "unknown phase-2 order '" + name + "'");
}

}  // namespace matsec

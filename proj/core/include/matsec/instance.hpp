#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "matsec/laminar_tree.hpp"
#include "matsec/matroid.hpp"

namespace matsec {

// Unvalidated instance description, shaped like the JSON on disk.
struct RawInstance {
  int n = 0;
  std::vector<double> weights;
  std::string matroid_type;  // uniform | partition | graphic | laminar

  int uniform_rank = 0;
  std::vector<LaminarSet> parts;  // partition matroid
  int num_vertices = -1;          // graphic; -1 = max endpoint + 1
  std::vector<std::pair<int, int>> edges;
  std::vector<LaminarSet> laminar_sets;

  std::string name;
};

// A validated ground set: weights, tie-broken ordering and a matroid oracle.
// Immutable after construction and safe to share across threads.
class Instance {
 public:
  Instance(std::vector<double> weights, std::shared_ptr<const Matroid> matroid,
           std::string name = "");

  int n() const { return static_cast<int>(weights_.size()); }
  const std::vector<double>& weights() const { return weights_; }
  double weight(ElementId f) const { return weights_[static_cast<size_t>(f)]; }
  double weight_of(std::span<const ElementId> s) const;

  const Matroid& matroid() const { return *matroid_; }
  const std::shared_ptr<const Matroid>& matroid_ptr() const { return matroid_; }

  WeightOrdering ordering() const { return WeightOrdering(&weights_); }
  bool heavier(ElementId a, ElementId b) const { return ordering().heavier(a, b); }

  // Elements sorted heaviest first; weight_rank()[f] is f's position in it.
  const std::vector<ElementId>& weight_order() const { return weight_order_; }
  const std::vector<int>& weight_rank() const { return weight_rank_; }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  // Populated by validate_instance when capacity-0 laminar sets forced
  // element removal: old id -> new id, -1 for removed. Empty when identity.
  std::vector<int> id_remap;
  std::vector<ElementId> removed_elements;  // original ids

 private:
  std::vector<double> weights_;
  std::shared_ptr<const Matroid> matroid_;
  std::vector<ElementId> weight_order_;
  std::vector<int> weight_rank_;
  std::string name_;
};

// Checks and normalizes a raw description into a runnable instance:
// weights nonnegative and of length n, ids in range, laminarity enforced,
// capacity-0 laminar sets removed together with their elements (ids are then
// remapped densely and the mapping recorded on the result), and a root set
// over the whole ground set added when absent.
Instance validate_instance(const RawInstance& raw);

// The laminar tree behind a laminar instance; throws kInvalidParams when the
// instance's matroid is not laminar.
const LaminarTree& laminar_tree_of(const Instance& instance);

// JSON wire format (see README): {"n", "weights", "matroid": {...}, "name"?}.
RawInstance parse_raw_instance(const std::string& json_text);
Instance parse_instance(const std::string& json_text);
Instance load_instance(const std::string& path);
std::string instance_to_json(const Instance& instance);
void save_instance(const Instance& instance, const std::string& path);

}  // namespace matsec

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "matsec/types.hpp"

namespace matsec {

// One constraint set of a laminar family: its members and the bound on how
// many of them an independent set may contain.
struct LaminarSet {
  std::vector<ElementId> members;
  int capacity = 0;
};

// A validated laminar family over [0, n): any two sets nested or disjoint,
// rooted at the full ground set. Construction lays the elements out
// depth-first, so every set occupies one contiguous block of positions;
// the laminar selection procedures lean on that numbering throughout.
class LaminarTree {
 public:
  struct Node {
    int parent = -1;
    std::vector<int> children;
    std::vector<ElementId> direct_members;  // members in no child set
    int capacity = 0;            // declared bound
    int effective_capacity = 0;  // min over the node and its ancestors
    int begin = 0, end = 0;      // positions [begin, end) of the member block
    int depth = 0;
  };

  // Builds from a flat family; a root over all of [0, n) with capacity n is
  // added when missing. Empty sets are dropped, duplicate member sets keep
  // the smaller capacity. Throws ValidationError on crossing sets,
  // out-of-range ids, or capacities < 1 (capacity-0 sets are resolved by
  // instance validation before a tree is built).
  static LaminarTree build(int n, std::vector<LaminarSet> family);

  // Structural laminarity test only: nested-or-disjoint for all pairs.
  // Throws ValidationError(kCrossingSets) with the offending pair.
  static void check_laminarity(int n, const std::vector<LaminarSet>& family);

  int n() const { return n_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int idx) const { return nodes_[static_cast<size_t>(idx)]; }
  int root() const { return 0; }
  int depth() const { return depth_; }

  // Deepest set containing the element.
  int deepest_node_of(ElementId f) const { return deepest_[static_cast<size_t>(f)]; }

  // Consecutive layout: order()[p] is the element at position p,
  // position()[f] the position of element f.
  const std::vector<ElementId>& order() const { return order_; }
  const std::vector<int>& position() const { return position_; }

  // Members of a node in position order (the block [begin, end)).
  std::vector<ElementId> members_of(int node_idx) const;

  // The family as normalized at build time (root included), members sorted.
  const std::vector<LaminarSet>& family() const { return family_; }

 private:
  bool deepest_is_within(ElementId f, int node_idx) const;

  int n_ = 0;
  int depth_ = 0;
  std::vector<Node> nodes_;
  std::vector<int> deepest_;
  std::vector<ElementId> order_;
  std::vector<int> position_;
  std::vector<LaminarSet> family_;
};

}  // namespace matsec

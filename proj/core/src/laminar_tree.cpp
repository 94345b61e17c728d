#include "matsec/laminar_tree.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace matsec {

namespace {

std::string set_to_string(const std::vector<ElementId>& members) {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < members.size(); ++i) {
    if (i > 0) out << ',';
    out << members[i];
  }
  out << '}';
  return out.str();
}

}  // namespace

LaminarTree LaminarTree::build(int n, std::vector<LaminarSet> family) {
  if (n < 0) throw ValidationError(ValidationIssue::kInvalidParams, "negative ground set size");

  // Normalize: sorted unique members, ids in range, capacities sane, empty
  // sets dropped, duplicate member sets merged onto the smaller capacity.
  std::map<std::vector<ElementId>, int> dedup;
  for (auto& set : family) {
    for (ElementId f : set.members) {
      if (f < 0 || f >= n) {
        throw ValidationError(ValidationIssue::kDanglingElement,
                              "laminar set member " + std::to_string(f) +
                                  " outside ground set of size " + std::to_string(n));
      }
    }
    std::sort(set.members.begin(), set.members.end());
    set.members.erase(std::unique(set.members.begin(), set.members.end()), set.members.end());
    if (set.capacity < 0) {
      throw ValidationError(ValidationIssue::kInvalidCapacity, "negative laminar capacity");
    }
    if (set.members.empty()) continue;
    if (set.capacity < 1) {
      throw ValidationError(ValidationIssue::kInvalidCapacity,
                            "capacity-0 laminar set " + set_to_string(set.members) +
                                " must be removed during instance validation");
    }
    auto [it, inserted] = dedup.emplace(std::move(set.members), set.capacity);
    if (!inserted) it->second = std::min(it->second, set.capacity);
  }

  LaminarTree tree;
  tree.n_ = n;

  std::vector<ElementId> everything(static_cast<size_t>(n));
  for (ElementId f = 0; f < n; ++f) everything[static_cast<size_t>(f)] = f;

  // Root over the full ground set; the unconstraining bound n when absent.
  int root_capacity = n;
  if (auto it = dedup.find(everything); it != dedup.end()) {
    root_capacity = it->second;
    dedup.erase(it);
  }

  std::vector<LaminarSet> ordered;
  ordered.reserve(dedup.size());
  for (auto& [members, capacity] : dedup) {
    ordered.push_back(LaminarSet{members, capacity});
  }
  std::sort(ordered.begin(), ordered.end(), [](const LaminarSet& a, const LaminarSet& b) {
    if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
    return a.members < b.members;
  });

  tree.nodes_.push_back(Node{});
  tree.nodes_[0].capacity = root_capacity;
  tree.deepest_.assign(static_cast<size_t>(n), 0);

  // Insert largest-first: every earlier set is at least as large, so members
  // of a new set must currently share one deepest node; otherwise the new
  // set crosses an inserted one.
  for (auto& set : ordered) {
    const int target = tree.deepest_[static_cast<size_t>(set.members[0])];
    for (ElementId f : set.members) {
      const int d = tree.deepest_[static_cast<size_t>(f)];
      if (d == target) continue;
      const int offender =
          tree.nodes_[static_cast<size_t>(d)].depth > tree.nodes_[static_cast<size_t>(target)].depth
              ? d
              : target;
      std::vector<ElementId> other;
      for (ElementId g = 0; g < n; ++g) {
        if (tree.deepest_is_within(g, offender)) other.push_back(g);
      }
      throw ValidationError(ValidationIssue::kCrossingSets,
                            "laminar sets cross: " + set_to_string(set.members) + " and " +
                                set_to_string(other));
    }
    const int idx = static_cast<int>(tree.nodes_.size());
    Node node;
    node.parent = target;
    node.capacity = set.capacity;
    node.depth = tree.nodes_[static_cast<size_t>(target)].depth + 1;
    tree.nodes_.push_back(std::move(node));
    tree.nodes_[static_cast<size_t>(target)].children.push_back(idx);
    for (ElementId f : set.members) tree.deepest_[static_cast<size_t>(f)] = idx;
  }

  for (ElementId f = 0; f < n; ++f) {
    tree.nodes_[static_cast<size_t>(tree.deepest_[static_cast<size_t>(f)])].direct_members.push_back(f);
  }

  // Effective capacities and depth; node indices are parent-before-child.
  tree.depth_ = 0;
  for (size_t v = 0; v < tree.nodes_.size(); ++v) {
    Node& node = tree.nodes_[v];
    node.effective_capacity = node.capacity;
    if (node.parent >= 0) {
      node.effective_capacity =
          std::min(node.capacity, tree.nodes_[static_cast<size_t>(node.parent)].effective_capacity);
    }
    tree.depth_ = std::max(tree.depth_, node.depth + 1);
  }

  // Sort children by the smallest element of their subtree for a stable,
  // readable layout.
  std::vector<ElementId> min_member(tree.nodes_.size(), n);
  for (size_t v = tree.nodes_.size(); v-- > 0;) {
    Node& node = tree.nodes_[v];
    for (ElementId f : node.direct_members) min_member[v] = std::min(min_member[v], f);
    for (int c : node.children) {
      min_member[v] = std::min(min_member[v], min_member[static_cast<size_t>(c)]);
    }
    std::sort(node.children.begin(), node.children.end(),
              [&](int a, int b) { return min_member[static_cast<size_t>(a)] < min_member[static_cast<size_t>(b)]; });
  }

  // Depth-first layout: direct members first, then the child blocks. Every
  // node's member set gets one contiguous interval of positions.
  tree.order_.reserve(static_cast<size_t>(n));
  tree.position_.assign(static_cast<size_t>(n), -1);
  std::vector<std::pair<int, size_t>> stack;  // node, next child
  stack.emplace_back(0, 0);
  tree.nodes_[0].begin = 0;
  while (!stack.empty()) {
    const auto [v, child_i] = stack.back();
    Node& node = tree.nodes_[static_cast<size_t>(v)];
    if (child_i == 0) {
      node.begin = static_cast<int>(tree.order_.size());
      for (ElementId f : node.direct_members) {
        tree.position_[static_cast<size_t>(f)] = static_cast<int>(tree.order_.size());
        tree.order_.push_back(f);
      }
    }
    if (child_i < node.children.size()) {
      ++stack.back().second;
      stack.emplace_back(node.children[child_i], 0);
    } else {
      node.end = static_cast<int>(tree.order_.size());
      stack.pop_back();
    }
  }

  // Normalized family for serialization and definition-level consumers.
  tree.family_.reserve(tree.nodes_.size());
  for (size_t v = 0; v < tree.nodes_.size(); ++v) {
    LaminarSet set;
    set.members = tree.members_of(static_cast<int>(v));
    std::sort(set.members.begin(), set.members.end());
    set.capacity = tree.nodes_[v].capacity;
    tree.family_.push_back(std::move(set));
  }

  return tree;
}

bool LaminarTree::deepest_is_within(ElementId f, int node_idx) const {
  int v = deepest_[static_cast<size_t>(f)];
  while (v != -1) {
    if (v == node_idx) return true;
    v = nodes_[static_cast<size_t>(v)].parent;
  }
  return false;
}

void LaminarTree::check_laminarity(int n, const std::vector<LaminarSet>& family) {
  std::vector<LaminarSet> relaxed = family;
  for (auto& set : relaxed) set.capacity = 1;  // structure only
  (void)build(n, std::move(relaxed));
}

std::vector<ElementId> LaminarTree::members_of(int node_idx) const {
  const Node& node = nodes_[static_cast<size_t>(node_idx)];
  return std::vector<ElementId>(order_.begin() + node.begin, order_.begin() + node.end);
}

}  // namespace matsec

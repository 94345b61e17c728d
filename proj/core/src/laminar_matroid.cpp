#include "matsec/laminar_matroid.hpp"

#include <algorithm>

namespace matsec {

namespace {

// Counters along root-to-leaf chains against the declared bounds.
class LaminarState final : public IndependenceState {
 public:
  explicit LaminarState(const LaminarTree* tree)
      : tree_(tree), counts_(static_cast<size_t>(tree->node_count()), 0) {}

  bool can_add(ElementId f) const override {
    for (int v = tree_->deepest_node_of(f); v != -1; v = tree_->node(v).parent) {
      if (counts_[static_cast<size_t>(v)] >= tree_->node(v).capacity) return false;
    }
    return true;
  }

  void add(ElementId f) override {
    for (int v = tree_->deepest_node_of(f); v != -1; v = tree_->node(v).parent) {
      ++counts_[static_cast<size_t>(v)];
    }
  }

  void reset() override { std::fill(counts_.begin(), counts_.end(), 0); }

 private:
  const LaminarTree* tree_;
  std::vector<int> counts_;
};

}  // namespace

LaminarMatroid::LaminarMatroid(LaminarTree tree) : Matroid(tree.n()), tree_(std::move(tree)) {}

std::unique_ptr<IndependenceState> LaminarMatroid::make_state() const {
  return std::make_unique<LaminarState>(&tree_);
}

bool LaminarMatroid::is_independent(std::span<const ElementId> s) const {
  check_elements(s);
  std::vector<int> counts(static_cast<size_t>(tree_.node_count()), 0);
  for (ElementId f : s) {
    for (int v = tree_.deepest_node_of(f); v != -1; v = tree_.node(v).parent) {
      if (++counts[static_cast<size_t>(v)] > tree_.node(v).capacity) return false;
    }
  }
  return true;
}

std::vector<int> LaminarMatroid::node_ranks(std::span<const ElementId> s) const {
  check_elements(s);
  // rank(S ∩ L) = min(effective capacity of L, sum over children + direct
  // members of S below L). Adding one element bumps the chain above it until
  // a saturated node absorbs the increase.
  std::vector<int> ranks(static_cast<size_t>(tree_.node_count()), 0);
  for (ElementId f : s) {
    for (int v = tree_.deepest_node_of(f); v != -1; v = tree_.node(v).parent) {
      if (ranks[static_cast<size_t>(v)] >= tree_.node(v).effective_capacity) break;
      ++ranks[static_cast<size_t>(v)];
    }
  }
  return ranks;
}

int LaminarMatroid::rank(std::span<const ElementId> s) const {
  if (tree_.n() == 0) return 0;
  return node_ranks(s)[static_cast<size_t>(tree_.root())];
}

std::vector<ElementId> LaminarMatroid::span(std::span<const ElementId> s) const {
  std::vector<int> ranks = node_ranks(s);
  std::vector<std::uint8_t> in_s(static_cast<size_t>(n_), 0);
  for (ElementId f : s) in_s[static_cast<size_t>(f)] = 1;
  // An outside element is spanned exactly when some set containing it is
  // already at its effective bound.
  std::vector<std::uint8_t> chain_tight(static_cast<size_t>(tree_.node_count()), 0);
  for (int v = 0; v < tree_.node_count(); ++v) {
    const auto& node = tree_.node(v);
    const bool tight = ranks[static_cast<size_t>(v)] >= node.effective_capacity;
    const bool above = node.parent >= 0 && chain_tight[static_cast<size_t>(node.parent)];
    chain_tight[static_cast<size_t>(v)] = (tight || above) ? 1 : 0;
  }
  std::vector<ElementId> result;
  for (ElementId f = 0; f < n_; ++f) {
    if (in_s[static_cast<size_t>(f)] || chain_tight[static_cast<size_t>(tree_.deepest_node_of(f))]) {
      result.push_back(f);
    }
  }
  return result;
}

std::vector<int> LaminarMatroid::span_layers(std::span<const ElementId> sample) const {
  check_elements(sample);
  const int m = static_cast<int>(sample.size());
  std::vector<int> layer(static_cast<size_t>(n_), m + 1);
  std::vector<int> ranks(static_cast<size_t>(tree_.node_count()), 0);
  std::vector<std::uint8_t> done(static_cast<size_t>(tree_.node_count()), 0);

  // When a node saturates at time i, everything in its block is spanned from
  // i on. Blocks are assigned at most once; nested already-done blocks are
  // skipped whole.
  auto assign_subtree = [&](int node_idx, int time) {
    std::vector<int> stack{node_idx};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (done[static_cast<size_t>(v)]) continue;
      done[static_cast<size_t>(v)] = 1;
      const auto& node = tree_.node(v);
      for (ElementId f : node.direct_members) {
        if (layer[static_cast<size_t>(f)] == m + 1) layer[static_cast<size_t>(f)] = time;
      }
      for (int c : node.children) stack.push_back(c);
    }
  };

  for (int i = 1; i <= m; ++i) {
    const ElementId a = sample[static_cast<size_t>(i - 1)];
    for (int v = tree_.deepest_node_of(a); v != -1; v = tree_.node(v).parent) {
      if (ranks[static_cast<size_t>(v)] >= tree_.node(v).effective_capacity) break;
      if (++ranks[static_cast<size_t>(v)] == tree_.node(v).effective_capacity) {
        assign_subtree(v, i);
      }
    }
  }
  for (ElementId a : sample) layer[static_cast<size_t>(a)] = kInSample;
  return layer;
}

}  // namespace matsec

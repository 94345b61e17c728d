#pragma once

#include <vector>

#include "matsec/laminar_tree.hpp"
#include "matsec/matroid.hpp"

namespace matsec {

// Sets independent when |S ∩ L| <= b_L for every set L of a laminar family.
// All per-element operations walk one root-to-leaf chain, so they cost
// O(tree depth).
class LaminarMatroid final : public Matroid {
 public:
  explicit LaminarMatroid(LaminarTree tree);

  const LaminarTree& tree() const { return tree_; }

  std::string type_name() const override { return "laminar"; }
  std::unique_ptr<IndependenceState> make_state() const override;
  bool is_independent(std::span<const ElementId> s) const override;
  int rank(std::span<const ElementId> s) const override;
  std::vector<ElementId> span(std::span<const ElementId> s) const override;
  std::vector<int> span_layers(std::span<const ElementId> sample) const override;

  // rank(S ∩ L) for every node L, computed in one pass over S.
  std::vector<int> node_ranks(std::span<const ElementId> s) const;

 private:
  LaminarTree tree_;
};

}  // namespace matsec

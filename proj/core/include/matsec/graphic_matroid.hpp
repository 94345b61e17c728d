#pragma once

#include <utility>
#include <vector>

#include "matsec/matroid.hpp"

namespace matsec {

// Element i is edge i of a multigraph; a set of edges is independent when it
// is a forest. Parallel edges are fine, self-loops are rejected upstream.
class GraphicMatroid final : public Matroid {
 public:
  GraphicMatroid(int num_vertices, std::vector<std::pair<int, int>> edges);

  int num_vertices() const { return num_vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  std::string type_name() const override { return "graphic"; }
  std::unique_ptr<IndependenceState> make_state() const override;
  bool is_independent(std::span<const ElementId> s) const override;
  int rank(std::span<const ElementId> s) const override;
  std::vector<ElementId> span(std::span<const ElementId> s) const override;
  std::vector<int> span_layers(std::span<const ElementId> sample) const override;

 private:
  int num_vertices_;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace matsec

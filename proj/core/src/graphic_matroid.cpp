#include "matsec/graphic_matroid.hpp"

#include "matsec/union_find.hpp"

namespace matsec {

namespace {

class GraphicState final : public IndependenceState {
 public:
  GraphicState(const std::vector<std::pair<int, int>>* edges, int num_vertices)
      : edges_(edges), num_vertices_(num_vertices), uf_(num_vertices) {}

  bool can_add(ElementId f) const override {
    const auto& [u, v] = (*edges_)[static_cast<size_t>(f)];
    return uf_.find(u) != uf_.find(v);
  }

  void add(ElementId f) override {
    const auto& [u, v] = (*edges_)[static_cast<size_t>(f)];
    uf_.unite(u, v);
  }

  void reset() override { uf_ = UnionFind(num_vertices_); }

 private:
  const std::vector<std::pair<int, int>>* edges_;
  int num_vertices_;
  mutable UnionFind uf_;
};

}  // namespace

GraphicMatroid::GraphicMatroid(int num_vertices, std::vector<std::pair<int, int>> edges)
    : Matroid(static_cast<int>(edges.size())), num_vertices_(num_vertices), edges_(std::move(edges)) {
  for (const auto& [u, v] : edges_) {
    if (u < 0 || u >= num_vertices_ || v < 0 || v >= num_vertices_) {
      throw ValidationError(ValidationIssue::kDanglingElement,
                            "graphic matroid: edge endpoint outside vertex range");
    }
    if (u == v) {
      throw ValidationError(ValidationIssue::kSelfLoop,
                            "graphic matroid: self-loop at vertex " + std::to_string(u));
    }
  }
}

std::unique_ptr<IndependenceState> GraphicMatroid::make_state() const {
  return std::make_unique<GraphicState>(&edges_, num_vertices_);
}

bool GraphicMatroid::is_independent(std::span<const ElementId> s) const {
  check_elements(s);
  UnionFind uf(num_vertices_);
  for (ElementId f : s) {
    const auto& [u, v] = edges_[static_cast<size_t>(f)];
    if (!uf.unite(u, v)) return false;
  }
  return true;
}

int GraphicMatroid::rank(std::span<const ElementId> s) const {
  check_elements(s);
  UnionFind uf(num_vertices_);
  int r = 0;
  for (ElementId f : s) {
    const auto& [u, v] = edges_[static_cast<size_t>(f)];
    if (uf.unite(u, v)) ++r;
  }
  return r;
}

std::vector<ElementId> GraphicMatroid::span(std::span<const ElementId> s) const {
  check_elements(s);
  UnionFind uf(num_vertices_);
  std::vector<std::uint8_t> in_s(static_cast<size_t>(n_), 0);
  for (ElementId f : s) {
    in_s[static_cast<size_t>(f)] = 1;
    const auto& [u, v] = edges_[static_cast<size_t>(f)];
    uf.unite(u, v);
  }
  std::vector<ElementId> result;
  for (ElementId f = 0; f < n_; ++f) {
    const auto& [u, v] = edges_[static_cast<size_t>(f)];
    if (in_s[static_cast<size_t>(f)] || uf.connected(u, v)) result.push_back(f);
  }
  return result;
}

std::vector<int> GraphicMatroid::span_layers(std::span<const ElementId> sample) const {
  check_elements(sample);
  const int m = static_cast<int>(sample.size());
  TimestampedUnionFind uf(num_vertices_);
  for (int i = 1; i <= m; ++i) {
    const auto& [u, v] = edges_[static_cast<size_t>(sample[static_cast<size_t>(i - 1)])];
    uf.unite(u, v, i);
  }
  std::vector<int> layer(static_cast<size_t>(n_), m + 1);
  for (ElementId f = 0; f < n_; ++f) {
    const auto& [u, v] = edges_[static_cast<size_t>(f)];
    const int t = uf.connect_time(u, v);
    if (t != TimestampedUnionFind::kNever) layer[static_cast<size_t>(f)] = t;
  }
  for (ElementId a : sample) layer[static_cast<size_t>(a)] = kInSample;
  return layer;
}

}  // namespace matsec

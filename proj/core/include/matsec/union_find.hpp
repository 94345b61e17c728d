#pragma once

#include <limits>
#include <vector>

namespace matsec {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<size_t>(n)), size_(static_cast<size_t>(n), 1) {
    for (int i = 0; i < n; ++i) parent_[static_cast<size_t>(i)] = i;
  }

  int find(int x) {
    int root = x;
    while (parent_[static_cast<size_t>(root)] != root) root = parent_[static_cast<size_t>(root)];
    while (parent_[static_cast<size_t>(x)] != root) {
      int next = parent_[static_cast<size_t>(x)];
      parent_[static_cast<size_t>(x)] = root;
      x = next;
    }
    return root;
  }

  bool connected(int x, int y) { return find(x) == find(y); }

  // Returns false when x and y were already in the same component.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[static_cast<size_t>(x)] < size_[static_cast<size_t>(y)]) std::swap(x, y);
    parent_[static_cast<size_t>(y)] = x;
    size_[static_cast<size_t>(x)] += size_[static_cast<size_t>(y)];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

// Union-find whose links remember when they were made. Without path
// compression the parent chains have increasing link times, so the earliest
// time two vertices became connected is the max link time on the two walks
// to their meeting node.
class TimestampedUnionFind {
 public:
  static constexpr int kNever = std::numeric_limits<int>::max();

  explicit TimestampedUnionFind(int n)
      : parent_(static_cast<size_t>(n), -1),
        size_(static_cast<size_t>(n), 1),
        link_time_(static_cast<size_t>(n), kNever) {}

  // Link times must be fed in nondecreasing order.
  bool unite(int x, int y, int time) {
    x = root(x);
    y = root(y);
    if (x == y) return false;
    if (size_[static_cast<size_t>(x)] < size_[static_cast<size_t>(y)]) std::swap(x, y);
    parent_[static_cast<size_t>(y)] = x;
    link_time_[static_cast<size_t>(y)] = time;
    size_[static_cast<size_t>(x)] += size_[static_cast<size_t>(y)];
    return true;
  }

  // Earliest time x and y were in one component, or kNever.
  int connect_time(int x, int y) const {
    int tx = 0;
    int ty = 0;
    while (x != y) {
      // Advance the walk whose next link happened earlier.
      const int lx = link_time_[static_cast<size_t>(x)];
      const int ly = link_time_[static_cast<size_t>(y)];
      if (lx == kNever && ly == kNever) return kNever;
      if (lx <= ly) {
        tx = lx;
        x = parent_[static_cast<size_t>(x)];
      } else {
        ty = ly;
        y = parent_[static_cast<size_t>(y)];
      }
    }
    return tx > ty ? tx : ty;
  }

 private:
  int root(int x) const {
    while (parent_[static_cast<size_t>(x)] != -1) x = parent_[static_cast<size_t>(x)];
    return x;
  }

  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> link_time_;
};

}  // namespace matsec

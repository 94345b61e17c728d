#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "matsec/types.hpp"

namespace matsec {

// Incremental independence checker. Holds an independent set and answers
// whether one more element keeps it independent. The concrete matroids back
// this with counters or union-find, so can_add/add cost O(depth) or less.
class IndependenceState {
 public:
  virtual ~IndependenceState() = default;
  virtual bool can_add(ElementId f) const = 0;
  virtual void add(ElementId f) = 0;  // pre: can_add(f)
  virtual void reset() = 0;
};

// Value used in span_layers() for elements of the sample itself.
inline constexpr int kInSample = -1;

class Matroid {
 public:
  explicit Matroid(int n) : n_(n) {}
  virtual ~Matroid() = default;

  int size() const { return n_; }
  virtual std::string type_name() const = 0;

  virtual std::unique_ptr<IndependenceState> make_state() const = 0;

  virtual bool is_independent(std::span<const ElementId> s) const;
  virtual int rank(std::span<const ElementId> s) const;

  // Closure of s: every element whose addition does not raise the rank.
  virtual std::vector<ElementId> span(std::span<const ElementId> s) const;

  // For a sample listed as a_1, ..., a_m, returns per element the smallest
  // i in [1, m] such that the element lies in Span({a_1, ..., a_i}), m+1 if
  // no prefix ever spans it, and kInSample for the sample elements
  // themselves. The default recomputes prefix spans; subclasses override
  // with counter-based trackers.
  virtual std::vector<int> span_layers(std::span<const ElementId> sample) const;

 protected:
  void check_elements(std::span<const ElementId> s) const;
  void check_element(ElementId f) const;

  int n_;
};

class UniformMatroid final : public Matroid {
 public:
  // Independent sets are those of size at most k. k >= 1 unless n == 0, so
  // no element is a loop.
  UniformMatroid(int n, int k);

  int rank_bound() const { return k_; }

  std::string type_name() const override { return "uniform"; }
  std::unique_ptr<IndependenceState> make_state() const override;
  bool is_independent(std::span<const ElementId> s) const override;
  int rank(std::span<const ElementId> s) const override;
  std::vector<ElementId> span(std::span<const ElementId> s) const override;
  std::vector<int> span_layers(std::span<const ElementId> sample) const override;

 private:
  int k_;
};

class PartitionMatroid final : public Matroid {
 public:
  // Disjoint parts with per-part capacities >= 1. Elements in no part are
  // unconstrained.
  PartitionMatroid(int n, std::vector<std::vector<ElementId>> parts, std::vector<int> capacities);

  const std::vector<std::vector<ElementId>>& parts() const { return parts_; }
  const std::vector<int>& capacities() const { return capacities_; }
  int part_of(ElementId f) const { return part_of_[static_cast<size_t>(f)]; }

  std::string type_name() const override { return "partition"; }
  std::unique_ptr<IndependenceState> make_state() const override;
  bool is_independent(std::span<const ElementId> s) const override;
  int rank(std::span<const ElementId> s) const override;
  std::vector<ElementId> span(std::span<const ElementId> s) const override;
  std::vector<int> span_layers(std::span<const ElementId> sample) const override;

 private:
  std::vector<std::vector<ElementId>> parts_;
  std::vector<int> capacities_;
  std::vector<int> part_of_;  // -1 when unconstrained
};

}  // namespace matsec

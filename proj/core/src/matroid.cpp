#include "matsec/matroid.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace matsec {

void Matroid::check_element(ElementId f) const {
  if (f < 0 || f >= n_) {
    throw std::out_of_range("element id " + std::to_string(f) + " outside ground set of size " +
                            std::to_string(n_));
  }
}

void Matroid::check_elements(std::span<const ElementId> s) const {
  for (ElementId f : s) check_element(f);
}

bool Matroid::is_independent(std::span<const ElementId> s) const {
  check_elements(s);
  auto state = make_state();
  for (ElementId f : s) {
    if (!state->can_add(f)) return false;
    state->add(f);
  }
  return true;
}

int Matroid::rank(std::span<const ElementId> s) const {
  check_elements(s);
  // Any maximal independent subset of s has size rank(s).
  auto state = make_state();
  int r = 0;
  for (ElementId f : s) {
    if (state->can_add(f)) {
      state->add(f);
      ++r;
    }
  }
  return r;
}

std::vector<ElementId> Matroid::span(std::span<const ElementId> s) const {
  check_elements(s);
  // Greedy basis of s, then f is spanned iff it cannot extend the basis.
  auto state = make_state();
  std::vector<std::uint8_t> in_s(static_cast<size_t>(n_), 0);
  for (ElementId f : s) {
    if (state->can_add(f)) state->add(f);
    in_s[static_cast<size_t>(f)] = 1;
  }
  std::vector<ElementId> result;
  for (ElementId f = 0; f < n_; ++f) {
    if (in_s[static_cast<size_t>(f)] || !state->can_add(f)) result.push_back(f);
  }
  return result;
}

std::vector<int> Matroid::span_layers(std::span<const ElementId> sample) const {
  check_elements(sample);
  const int m = static_cast<int>(sample.size());
  std::vector<int> layer(static_cast<size_t>(n_), m + 1);
  for (ElementId a : sample) layer[static_cast<size_t>(a)] = kInSample;

  std::vector<ElementId> prefix;
  prefix.reserve(sample.size());
  for (int i = 1; i <= m; ++i) {
    prefix.push_back(sample[static_cast<size_t>(i - 1)]);
    for (ElementId f : span(prefix)) {
      int& l = layer[static_cast<size_t>(f)];
      if (l == m + 1) l = i;
    }
  }
  return layer;
}

// ---------------------------------------------------------------------------
// Uniform matroid

namespace {

class UniformState final : public IndependenceState {
 public:
  explicit UniformState(int k) : k_(k) {}
  bool can_add(ElementId) const override { return count_ < k_; }
  void add(ElementId) override { ++count_; }
  void reset() override { count_ = 0; }

 private:
  int k_;
  int count_ = 0;
};

}  // namespace

UniformMatroid::UniformMatroid(int n, int k) : Matroid(n), k_(k) {
  if (k < 0 || (k == 0 && n > 0)) {
    throw ValidationError(ValidationIssue::kInvalidCapacity,
                          "uniform rank must be >= 1 on a nonempty ground set");
  }
}

std::unique_ptr<IndependenceState> UniformMatroid::make_state() const {
  return std::make_unique<UniformState>(k_);
}

bool UniformMatroid::is_independent(std::span<const ElementId> s) const {
  check_elements(s);
  return static_cast<int>(s.size()) <= k_;
}

int UniformMatroid::rank(std::span<const ElementId> s) const {
  check_elements(s);
  return std::min(static_cast<int>(s.size()), k_);
}

std::vector<ElementId> UniformMatroid::span(std::span<const ElementId> s) const {
  check_elements(s);
  if (static_cast<int>(s.size()) >= k_) {
    std::vector<ElementId> all(static_cast<size_t>(n_));
    for (ElementId f = 0; f < n_; ++f) all[static_cast<size_t>(f)] = f;
    return all;
  }
  std::vector<ElementId> result(s.begin(), s.end());
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::vector<int> UniformMatroid::span_layers(std::span<const ElementId> sample) const {
  check_elements(sample);
  const int m = static_cast<int>(sample.size());
  // The k-th sample element saturates the whole ground set.
  const int fill = m >= k_ ? k_ : m + 1;
  std::vector<int> layer(static_cast<size_t>(n_), fill);
  for (ElementId a : sample) layer[static_cast<size_t>(a)] = kInSample;
  return layer;
}

// ---------------------------------------------------------------------------
// Partition matroid

namespace {

class PartitionState final : public IndependenceState {
 public:
  PartitionState(const std::vector<int>* part_of, const std::vector<int>* capacities)
      : part_of_(part_of), capacities_(capacities), counts_(capacities->size(), 0) {}

  bool can_add(ElementId f) const override {
    const int p = (*part_of_)[static_cast<size_t>(f)];
    return p < 0 || counts_[static_cast<size_t>(p)] < (*capacities_)[static_cast<size_t>(p)];
  }

  void add(ElementId f) override {
    const int p = (*part_of_)[static_cast<size_t>(f)];
    if (p >= 0) ++counts_[static_cast<size_t>(p)];
  }

  void reset() override { std::fill(counts_.begin(), counts_.end(), 0); }

 private:
  const std::vector<int>* part_of_;
  const std::vector<int>* capacities_;
  std::vector<int> counts_;
};

}  // namespace

PartitionMatroid::PartitionMatroid(int n, std::vector<std::vector<ElementId>> parts,
                                   std::vector<int> capacities)
    : Matroid(n), parts_(std::move(parts)), capacities_(std::move(capacities)) {
  if (parts_.size() != capacities_.size()) {
    throw ValidationError(ValidationIssue::kInvalidParams,
                          "partition matroid: one capacity per part required");
  }
  part_of_.assign(static_cast<size_t>(n), -1);
  for (size_t p = 0; p < parts_.size(); ++p) {
    if (capacities_[p] < 1) {
      throw ValidationError(ValidationIssue::kInvalidCapacity,
                            "partition matroid: capacities must be >= 1");
    }
    for (ElementId f : parts_[p]) {
      check_element(f);
      if (part_of_[static_cast<size_t>(f)] != -1) {
        throw ValidationError(ValidationIssue::kInvalidParams,
                              "partition matroid: parts must be disjoint (element " +
                                  std::to_string(f) + " repeated)");
      }
      part_of_[static_cast<size_t>(f)] = static_cast<int>(p);
    }
  }
}

std::unique_ptr<IndependenceState> PartitionMatroid::make_state() const {
  return std::make_unique<PartitionState>(&part_of_, &capacities_);
}

bool PartitionMatroid::is_independent(std::span<const ElementId> s) const {
  check_elements(s);
  std::vector<int> counts(parts_.size(), 0);
  for (ElementId f : s) {
    const int p = part_of_[static_cast<size_t>(f)];
    if (p >= 0 && ++counts[static_cast<size_t>(p)] > capacities_[static_cast<size_t>(p)]) {
      return false;
    }
  }
  return true;
}

int PartitionMatroid::rank(std::span<const ElementId> s) const {
  check_elements(s);
  std::vector<int> counts(parts_.size(), 0);
  int free_elements = 0;
  for (ElementId f : s) {
    const int p = part_of_[static_cast<size_t>(f)];
    if (p < 0) {
      ++free_elements;
    } else {
      ++counts[static_cast<size_t>(p)];
    }
  }
  int r = free_elements;
  for (size_t p = 0; p < parts_.size(); ++p) {
    r += std::min(counts[p], capacities_[p]);
  }
  return r;
}

std::vector<ElementId> PartitionMatroid::span(std::span<const ElementId> s) const {
  check_elements(s);
  std::vector<int> counts(parts_.size(), 0);
  std::vector<std::uint8_t> in_s(static_cast<size_t>(n_), 0);
  for (ElementId f : s) {
    in_s[static_cast<size_t>(f)] = 1;
    const int p = part_of_[static_cast<size_t>(f)];
    if (p >= 0) ++counts[static_cast<size_t>(p)];
  }
  std::vector<ElementId> result;
  for (ElementId f = 0; f < n_; ++f) {
    const int p = part_of_[static_cast<size_t>(f)];
    const bool saturated = p >= 0 && counts[static_cast<size_t>(p)] >= capacities_[static_cast<size_t>(p)];
    if (in_s[static_cast<size_t>(f)] || saturated) result.push_back(f);
  }
  return result;
}

std::vector<int> PartitionMatroid::span_layers(std::span<const ElementId> sample) const {
  check_elements(sample);
  const int m = static_cast<int>(sample.size());
  std::vector<int> layer(static_cast<size_t>(n_), m + 1);
  std::vector<int> counts(parts_.size(), 0);
  std::vector<int> saturated_at(parts_.size(), -1);
  for (int i = 1; i <= m; ++i) {
    const ElementId a = sample[static_cast<size_t>(i - 1)];
    const int p = part_of_[static_cast<size_t>(a)];
    if (p >= 0 && saturated_at[static_cast<size_t>(p)] < 0 &&
        ++counts[static_cast<size_t>(p)] == capacities_[static_cast<size_t>(p)]) {
      saturated_at[static_cast<size_t>(p)] = i;
    }
  }
  for (size_t p = 0; p < parts_.size(); ++p) {
    if (saturated_at[p] < 0) continue;
    for (ElementId f : parts_[p]) layer[static_cast<size_t>(f)] = saturated_at[p];
  }
  for (ElementId a : sample) layer[static_cast<size_t>(a)] = kInSample;
  return layer;
}

}  // namespace matsec

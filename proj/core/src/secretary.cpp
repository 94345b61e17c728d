#include "matsec/secretary.hpp"

#include <cmath>
#include <stdexcept>

namespace matsec {

int threshold_index(int m) {
  if (m < 1) throw std::invalid_argument("threshold_index: stream length must be >= 1");
  // m/e is irrational, so the floor is numerically safe.
  return static_cast<int>(std::floor(static_cast<double>(m) / std::exp(1.0)));
}

double success_probability(int r, int n) {
  if (n < 1 || r < 0 || r >= n) {
    throw std::invalid_argument("success_probability: need 0 <= r < n, n >= 1");
  }
  if (r == 0) return 1.0 / static_cast<double>(n);
  double harmonic = 0.0;
  for (int j = r + 1; j <= n; ++j) harmonic += 1.0 / static_cast<double>(j - 1);
  return static_cast<double>(r) / static_cast<double>(n) * harmonic;
}

ThresholdRule::ThresholdRule(int m, WeightOrdering order)
    : ThresholdRule(m, threshold_index(m), order) {}

ThresholdRule::ThresholdRule(int m, int r, WeightOrdering order) : m_(m), r_(r), order_(order) {
  if (m < 1 || r < 0 || r >= m) {
    throw std::invalid_argument("ThresholdRule: need 0 <= r < m");
  }
}

std::optional<ElementId> ThresholdRule::feed(ElementId e) {
  if (seen_ >= m_) return std::nullopt;  // stream already exhausted
  const int position = seen_++;
  if (position < r_) {
    if (best_sample_ < 0 || order_.heavier(e, best_sample_)) best_sample_ = e;
    return std::nullopt;
  }
  if (selected_ >= 0) return std::nullopt;
  if (best_sample_ < 0 || order_.heavier(e, best_sample_)) {
    selected_ = e;
    return e;
  }
  return std::nullopt;
}

std::optional<ElementId> run_threshold_rule(std::span<const ElementId> stream,
                                            WeightOrdering order) {
  if (stream.empty()) return std::nullopt;
  ThresholdRule rule(static_cast<int>(stream.size()), order);
  for (ElementId e : stream) rule.feed(e);
  if (rule.has_selected()) return rule.selection();
  return std::nullopt;
}

}  // namespace matsec

#pragma once

#include <optional>
#include <span>

#include "matsec/types.hpp"

namespace matsec {

// Sample size of the classical threshold rule on a stream of length m:
// floor(m / e). Throws std::invalid_argument for m < 1.
int threshold_index(int m);

// Probability that the rule with sample size r on a uniformly ordered stream
// of n distinct keys picks the maximum: 1/n for r = 0, otherwise
// (r/n) * sum_{j=r+1..n} 1/(j-1). Throws for r < 0, n < 1 or r >= n.
double success_probability(int r, int n);

// Online single-selection rule for a stream whose length is known up front.
// The first threshold_index(m) arrivals are observed only; afterwards the
// first arrival beating every observed one is taken. Selects at most once;
// may select nothing.
class ThresholdRule {
 public:
  ThresholdRule(int m, WeightOrdering order);
  ThresholdRule(int m, int r, WeightOrdering order);  // explicit sample size

  // Returns the element when this arrival is selected.
  std::optional<ElementId> feed(ElementId e);

  bool has_selected() const { return selected_ >= 0; }
  ElementId selection() const { return selected_; }
  int stream_size() const { return m_; }
  int sample_size() const { return r_; }
  int seen() const { return seen_; }

 private:
  int m_;
  int r_;
  int seen_ = 0;
  ElementId best_sample_ = -1;  // -1: empty sample, beaten by anything
  ElementId selected_ = -1;
  WeightOrdering order_;
};

// Runs the rule over a full stream; the stream length fixes the sample size.
std::optional<ElementId> run_threshold_rule(std::span<const ElementId> stream,
                                            WeightOrdering order);

}  // namespace matsec

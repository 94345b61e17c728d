#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace matsec {

// Elements of a ground set are dense ids in [0, n).
using ElementId = int;

// Strict total order on elements: weight descending, id ascending on equal
// weights. Every "heavier than" comparison in the library goes through this,
// so equal raw weights still induce a linear order and a unique optimum.
class WeightOrdering {
 public:
  WeightOrdering() = default;
  explicit WeightOrdering(const std::vector<double>* weights) : weights_(weights) {}

  bool heavier(ElementId a, ElementId b) const {
    const double wa = (*weights_)[static_cast<size_t>(a)];
    const double wb = (*weights_)[static_cast<size_t>(b)];
    if (wa != wb) return wa > wb;
    return a < b;
  }

  // Usable directly as a sort comparator (heaviest first).
  bool operator()(ElementId a, ElementId b) const { return heavier(a, b); }

 private:
  const std::vector<double>* weights_ = nullptr;
};

enum class ValidationIssue {
  kCrossingSets,     // two laminar sets neither nested nor disjoint
  kDanglingElement,  // element id outside [0, n) or shape mismatch
  kNegativeWeight,
  kInvalidCapacity,  // capacity that would introduce loops or is negative
  kSelfLoop,         // graphic matroid edge (v, v)
  kInvalidParams,    // anything else malformed
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationIssue issue, const std::string& message)
      : std::runtime_error(message), issue_(issue) {}

  ValidationIssue issue() const { return issue_; }

 private:
  ValidationIssue issue_;
};

// Arrival order of the elements left for the selection phase.
// kDefault resolves per algorithm: the span-layer schedule for the free order
// procedure, a fresh uniform order for the laminar procedures.
enum class Phase2Order {
  kDefault,
  kSchedule,     // free order only: span layers, then the unspanned tail
  kRandom,
  kIdAscending,
  kReversed,
  kOptLast,      // global optimum elements moved to the end
};

std::string to_string(Phase2Order order);
Phase2Order phase2_order_from_string(const std::string& name);

}  // namespace matsec

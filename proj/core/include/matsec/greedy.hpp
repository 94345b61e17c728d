#pragma once

#include <span>
#include <vector>

#include "matsec/instance.hpp"

namespace matsec {

// The maximum-weight independent subset of `restrict`, unique under the
// tie-broken ordering, reported heaviest first. Matroid greedy is exact.
std::vector<ElementId> greedy_max_weight(const Instance& instance,
                                         std::span<const ElementId> restrict);

// greedy_max_weight over the whole ground set: the offline optimum.
std::vector<ElementId> greedy_opt(const Instance& instance);

}  // namespace matsec

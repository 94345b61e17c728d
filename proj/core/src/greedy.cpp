#include "matsec/greedy.hpp"

#include <algorithm>

namespace matsec {

std::vector<ElementId> greedy_max_weight(const Instance& instance,
                                         std::span<const ElementId> restrict) {
  std::vector<ElementId> sorted(restrict.begin(), restrict.end());
  std::sort(sorted.begin(), sorted.end(), instance.ordering());
  auto state = instance.matroid().make_state();
  std::vector<ElementId> picked;
  for (ElementId f : sorted) {
    if (state->can_add(f)) {
      state->add(f);
      picked.push_back(f);
    }
  }
  return picked;
}

std::vector<ElementId> greedy_opt(const Instance& instance) {
  return greedy_max_weight(instance, instance.weight_order());
}

}  // namespace matsec

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace matsec {

// Aggregated result of a Monte Carlo experiment.
struct RunStats {
  std::string instance_name;
  std::string algorithm;
  long long trials = 0;
  std::uint64_t seed = 0;
  double q = 0.0;
  std::string phase2_order;

  double mean_weight = 0.0;
  double std_weight = 0.0;  // sample standard deviation of per-trial weight
  double ci_lo = 0.0;       // 95% normal-approximation interval for the mean
  double ci_hi = 0.0;
  double opt_weight = 0.0;
  double ratio = 0.0;  // opt_weight / mean_weight

  std::vector<double> selection_frequency;  // per element

  double wall_time_sec = 0.0;

  bool operator==(const RunStats&) const = default;
};

}  // namespace matsec

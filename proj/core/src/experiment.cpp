#include "matsec/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "matsec/free_order.hpp"
#include "matsec/greedy.hpp"
#include "matsec/laminar_secretary.hpp"
#include "matsec/parallel.hpp"
#include "matsec/rng.hpp"

namespace matsec {

std::string to_string(AlgorithmKind kind) {
  switch (kind) {
    case AlgorithmKind::kFreeOrder: return "free-order";
    case AlgorithmKind::kLaminarSimple: return "laminar-simple";
    case AlgorithmKind::kLaminarImproved: return "laminar-improved";
  }
  return "free-order";
}

AlgorithmKind algorithm_from_string(const std::string& name) {
  if (name == "free-order") return AlgorithmKind::kFreeOrder;
  if (name == "laminar-simple") return AlgorithmKind::kLaminarSimple;
  if (name == "laminar-improved") return AlgorithmKind::kLaminarImproved;
  throw ValidationError(ValidationIssue::kInvalidParams, "unknown algorithm '" + name + "'");
}

RunStats run_trials(const Instance& instance, const ExperimentConfig& config) {
  if (config.trials < 1) {
    throw ValidationError(ValidationIssue::kInvalidParams, "trials must be >= 1");
  }
  const bool laminar_algorithm = config.algorithm != AlgorithmKind::kFreeOrder;
  if (laminar_algorithm) {
    laminar_tree_of(instance);  // throws on algorithm/matroid mismatch
  }
  double q = 0.5;
  if (config.algorithm == AlgorithmKind::kLaminarSimple) q = kSimpleSampleProb;
  if (config.algorithm == AlgorithmKind::kLaminarImproved) {
    q = config.q >= 0.0 ? config.q : kImprovedSampleProb;
    if (!(q > 0.0 && q < 1.0)) {
      throw ValidationError(ValidationIssue::kInvalidParams, "q must lie in (0, 1)");
    }
  }
  Phase2Order order = config.phase2_order;
  if (order == Phase2Order::kDefault) {
    order = laminar_algorithm ? Phase2Order::kRandom : Phase2Order::kSchedule;
  }
  if (laminar_algorithm && order == Phase2Order::kSchedule) {
    throw ValidationError(ValidationIssue::kInvalidParams,
                          "schedule order applies to the free order procedure only");
  }

  const auto start = std::chrono::steady_clock::now();
  const int n = instance.n();

  struct Chunk {
    double weight_sum = 0.0;
    double weight_sq_sum = 0.0;
    std::vector<std::int64_t> selected;
  };
  const std::int64_t chunk_size = 1024;
  std::vector<Chunk> chunks(static_cast<size_t>(chunk_count(config.trials, chunk_size)));

  for_each_chunk(config.trials, chunk_size, config.threads,
                 [&](std::int64_t begin, std::int64_t end, int ci) {
                   Chunk& chunk = chunks[static_cast<size_t>(ci)];
                   chunk.selected.assign(static_cast<size_t>(n), 0);
                   for (std::int64_t t = begin; t < end; ++t) {
                     Rng rng = Rng::for_trial(config.seed, static_cast<std::uint64_t>(t));
                     std::vector<ElementId> picked;
                     switch (config.algorithm) {
                       case AlgorithmKind::kFreeOrder:
                         picked = run_free_order(instance, rng, order);
                         break;
                       case AlgorithmKind::kLaminarSimple:
                         picked = run_simple_laminar(instance, rng, order);
                         break;
                       case AlgorithmKind::kLaminarImproved:
                         picked = run_improved_laminar(instance, rng, q, order);
                         break;
                     }
                     if (!instance.matroid().is_independent(picked)) {
                       throw std::logic_error("trial produced a dependent set");
                     }
                     const double w = instance.weight_of(picked);
                     chunk.weight_sum += w;
                     chunk.weight_sq_sum += w * w;
                     for (ElementId f : picked) ++chunk.selected[static_cast<size_t>(f)];
                   }
                 });

  double weight_sum = 0.0;
  double weight_sq_sum = 0.0;
  std::vector<std::int64_t> selected(static_cast<size_t>(n), 0);
  for (const Chunk& chunk : chunks) {
    weight_sum += chunk.weight_sum;
    weight_sq_sum += chunk.weight_sq_sum;
    for (int f = 0; f < n; ++f) selected[static_cast<size_t>(f)] += chunk.selected[static_cast<size_t>(f)];
  }

  RunStats stats;
  stats.instance_name = instance.name();
  stats.algorithm = to_string(config.algorithm);
  stats.trials = config.trials;
  stats.seed = config.seed;
  stats.q = q;
  stats.phase2_order = to_string(order);

  const double trials = static_cast<double>(config.trials);
  stats.mean_weight = weight_sum / trials;
  if (config.trials > 1) {
    const double variance =
        std::max(0.0, (weight_sq_sum - trials * stats.mean_weight * stats.mean_weight) /
                          (trials - 1.0));
    stats.std_weight = std::sqrt(variance);
  }
  const double half_width = 1.959963984540054 * stats.std_weight / std::sqrt(trials);
  stats.ci_lo = stats.mean_weight - half_width;
  stats.ci_hi = stats.mean_weight + half_width;

  const std::vector<ElementId> opt = greedy_opt(instance);
  stats.opt_weight = instance.weight_of(opt);
  stats.ratio = stats.mean_weight > 0.0 ? stats.opt_weight / stats.mean_weight : 0.0;

  stats.selection_frequency.resize(static_cast<size_t>(n));
  for (int f = 0; f < n; ++f) {
    stats.selection_frequency[static_cast<size_t>(f)] =
        static_cast<double>(selected[static_cast<size_t>(f)]) / trials;
  }

  stats.wall_time_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return stats;
}

WorstOrderReport worst_phase2_order_search(const Instance& instance, AlgorithmKind algorithm,
                                           double q) {
  const int n = instance.n();
  if (n > 8) {
    throw ValidationError(ValidationIssue::kInvalidParams,
                          "worst-order search enumerates all arrival orders; n <= 8 only");
  }
  const bool laminar_algorithm = algorithm != AlgorithmKind::kFreeOrder;
  if (laminar_algorithm) laminar_tree_of(instance);
  if (q < 0.0) {
    q = algorithm == AlgorithmKind::kFreeOrder
            ? 0.5
            : (algorithm == AlgorithmKind::kLaminarSimple ? kSimpleSampleProb
                                                          : kImprovedSampleProb);
  }
  if (!(q > 0.0 && q < 1.0)) {
    throw ValidationError(ValidationIssue::kInvalidParams, "q must lie in (0, 1)");
  }

  std::vector<double> pow_q(static_cast<size_t>(n + 1)), pow_1mq(static_cast<size_t>(n + 1));
  pow_q[0] = pow_1mq[0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    pow_q[static_cast<size_t>(i)] = pow_q[static_cast<size_t>(i - 1)] * q;
    pow_1mq[static_cast<size_t>(i)] = pow_1mq[static_cast<size_t>(i - 1)] * (1.0 - q);
  }

  WorstOrderReport report;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<ElementId> sample;
    std::vector<ElementId> rest;
    std::vector<std::uint8_t> in_sample(static_cast<size_t>(n), 0);
    for (ElementId f = 0; f < n; ++f) {
      if (mask & (std::uint32_t{1} << f)) {
        sample.push_back(f);
        in_sample[static_cast<size_t>(f)] = 1;
      } else {
        rest.push_back(f);
      }
    }
    const double mask_prob =
        pow_q[sample.size()] * pow_1mq[static_cast<size_t>(n) - sample.size()];

    SamplePhase phase;
    std::vector<ElementId> opt_a;
    PartitionScheme odd, even, interval;
    if (algorithm == AlgorithmKind::kFreeOrder) {
      phase = make_sample_phase(instance, sample);
    } else {
      opt_a = greedy_max_weight(instance, sample);
      if (algorithm == AlgorithmKind::kLaminarSimple) {
        odd = simple_scheme(instance, in_sample, opt_a, true);
        even = simple_scheme(instance, in_sample, opt_a, false);
      } else {
        interval = improved_scheme(instance, in_sample, opt_a);
      }
    }

    double worst = std::numeric_limits<double>::infinity();
    std::sort(rest.begin(), rest.end());
    do {
      double value = 0.0;
      switch (algorithm) {
        case AlgorithmKind::kFreeOrder:
          value = instance.weight_of(run_free_order_with_order(instance, phase, rest));
          break;
        case AlgorithmKind::kLaminarSimple:
          value = 0.5 * (instance.weight_of(run_scheme_phase2(instance, odd, rest)) +
                         instance.weight_of(run_scheme_phase2(instance, even, rest)));
          break;
        case AlgorithmKind::kLaminarImproved:
          value = instance.weight_of(run_scheme_phase2(instance, interval, rest));
          break;
      }
      worst = std::min(worst, value);
    } while (std::next_permutation(rest.begin(), rest.end()));
    report.expected_weight += mask_prob * worst;
  }

  report.opt_weight = instance.weight_of(greedy_opt(instance));
  report.ratio =
      report.expected_weight > 0.0 ? report.opt_weight / report.expected_weight : 0.0;
  return report;
}

}  // namespace matsec

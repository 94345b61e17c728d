#include "matsec/exact_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "matsec/free_order.hpp"
#include "matsec/greedy.hpp"
#include "matsec/laminar_matroid.hpp"
#include "matsec/laminar_secretary.hpp"
#include "matsec/parallel.hpp"
#include "matsec/secretary.hpp"

namespace matsec {

namespace {

using Mask = std::uint32_t;

std::vector<ElementId> mask_elements(Mask mask, int n) {
  std::vector<ElementId> elements;
  for (ElementId f = 0; f < n; ++f) {
    if (mask & (Mask{1} << f)) elements.push_back(f);
  }
  return elements;
}

std::string mask_string(Mask mask, int n) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (ElementId f = 0; f < n; ++f) {
    if (mask & (Mask{1} << f)) {
      if (!first) out << ",";
      out << f;
      first = false;
    }
  }
  out << "}";
  return out.str();
}

// Greedy basis driven purely by the independence oracle; the exact checks
// use this instead of the incremental states of the algorithm modules.
class OracleBasis {
 public:
  explicit OracleBasis(const Matroid& matroid) : matroid_(&matroid) {}

  bool spans(ElementId f) const {
    basis_.push_back(f);
    const bool independent = matroid_->is_independent(basis_);
    basis_.pop_back();
    return !independent;
  }

  // Adds f to the basis when it extends it; returns whether it did.
  bool extend(ElementId f) {
    if (spans(f)) return false;
    basis_.push_back(f);
    return true;
  }

  int rank() const { return static_cast<int>(basis_.size()); }

 private:
  const Matroid* matroid_;
  mutable std::vector<ElementId> basis_;
};

bool oracle_in_span(const Matroid& matroid, std::span<const ElementId> base, ElementId f) {
  OracleBasis basis(matroid);
  for (ElementId e : base) basis.extend(e);
  return basis.spans(f);
}

JIndices oracle_j_indices(const Instance& instance, Mask sample_mask, ElementId f) {
  JIndices result;
  OracleBasis sampled(instance.matroid());
  OracleBasis unsampled(instance.matroid());
  for (int j = 1; j <= instance.n(); ++j) {
    const ElementId e = instance.weight_order()[static_cast<size_t>(j - 1)];
    if (e == f) continue;
    if (sample_mask & (Mask{1} << e)) {
      sampled.extend(e);
      if (result.j1 == JIndices::kInfinity && sampled.spans(f)) result.j1 = j;
    } else {
      unsampled.extend(e);
      if (result.j2 == JIndices::kInfinity && unsampled.spans(f)) result.j2 = j;
    }
  }
  return result;
}

}  // namespace

std::vector<ElementId> brute_opt(const Instance& instance) {
  const int n = instance.n();
  if (n > 20) throw std::invalid_argument("brute_opt: ground set too large (n <= 20)");

  std::vector<ElementId> best;
  double best_weight = -1.0;
  bool have_best = false;
  constexpr double kTol = 1e-9;

  for (Mask mask = 0; mask < (Mask{1} << n); ++mask) {
    std::vector<ElementId> candidate = mask_elements(mask, n);
    if (!instance.matroid().is_independent(candidate)) continue;
    std::sort(candidate.begin(), candidate.end(), instance.ordering());
    const double weight = instance.weight_of(candidate);
    bool better = false;
    if (!have_best || weight > best_weight + kTol) {
      better = true;
    } else if (weight >= best_weight - kTol) {
      // Same weight: prefer the set greedy prefers, i.e. the one whose
      // heaviest-first listing wins the elementwise comparison; a strict
      // superset (padded with zero-weight elements) also wins.
      const size_t common = std::min(candidate.size(), best.size());
      bool decided = false;
      for (size_t i = 0; i < common && !decided; ++i) {
        if (candidate[i] == best[i]) continue;
        better = instance.heavier(candidate[i], best[i]);
        decided = true;
      }
      if (!decided) better = candidate.size() > best.size();
    }
    if (better) {
      best = std::move(candidate);
      best_weight = weight;
      have_best = true;
    }
  }
  return best;
}

AxiomCheckResult axiom_check(const Matroid& matroid) {
  const int n = matroid.size();
  if (n > 13) throw std::invalid_argument("axiom_check: ground set too large (n <= 13)");

  AxiomCheckResult result;
  const Mask total = Mask{1} << n;
  std::vector<std::uint8_t> independent(total);
  for (Mask mask = 0; mask < total; ++mask) {
    independent[mask] = matroid.is_independent(mask_elements(mask, n)) ? 1 : 0;
  }

  if (!independent[0]) {
    result.pass = false;
    result.failure = "empty set reported dependent";
    return result;
  }

  // Downward closure via single-element removals (induction gives the rest).
  for (Mask mask = 0; mask < total; ++mask) {
    if (!independent[mask]) continue;
    for (int f = 0; f < n; ++f) {
      const Mask bit = Mask{1} << f;
      if ((mask & bit) && !independent[mask ^ bit]) {
        result.pass = false;
        result.failure = "downward closure violated";
        result.witness_a = mask_elements(mask, n);
        result.witness_b = mask_elements(mask ^ bit, n);
        return result;
      }
    }
  }

  // Exchange between independent sets of sizes k+1 and k; together with
  // downward closure this implies exchange for any size gap.
  std::vector<std::vector<Mask>> by_size(static_cast<size_t>(n + 1));
  for (Mask mask = 0; mask < total; ++mask) {
    if (independent[mask]) by_size[static_cast<size_t>(std::popcount(mask))].push_back(mask);
  }
  for (int k = 0; k < n; ++k) {
    for (Mask larger : by_size[static_cast<size_t>(k + 1)]) {
      for (Mask smaller : by_size[static_cast<size_t>(k)]) {
        bool extended = false;
        Mask candidates = larger & ~smaller;
        while (candidates != 0) {
          const Mask bit = candidates & (~candidates + 1);
          if (independent[smaller | bit]) {
            extended = true;
            break;
          }
          candidates ^= bit;
        }
        if (!extended) {
          result.pass = false;
          result.failure = "exchange violated";
          result.witness_a = mask_elements(larger, n);
          result.witness_b = mask_elements(smaller, n);
          return result;
        }
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Free order enumeration

ExactReport exact_free_order(const Instance& instance, int threads) {
  const int n = instance.n();
  if (n > 14) throw std::invalid_argument("exact_free_order: ground set too large (n <= 14)");

  ExactReport report;
  report.instance_name = instance.name();
  report.algorithm = "free-order";
  report.q = 0.5;
  report.opt = brute_opt(instance);
  report.opt_weight = instance.weight_of(report.opt);

  const Mask total = Mask{1} << n;
  const std::vector<std::uint8_t> in_opt = [&] {
    std::vector<std::uint8_t> v(static_cast<size_t>(n), 0);
    for (ElementId f : report.opt) v[static_cast<size_t>(f)] = 1;
    return v;
  }();

  struct Chunk {
    std::vector<std::int64_t> selected_count;
    double weight_sum = 0.0;
    std::vector<std::string> violations;
  };

  const std::int64_t chunk_size = 1024;
  std::vector<Chunk> chunks(static_cast<size_t>(chunk_count(total, chunk_size)));
  // j1 <= j2 per (opt element, sample mask), for the complement check below.
  std::vector<std::vector<std::uint8_t>> condition(report.opt.size(),
                                                   std::vector<std::uint8_t>(total, 0));

  for_each_chunk(total, chunk_size, threads, [&](std::int64_t begin, std::int64_t end, int ci) {
    Chunk& chunk = chunks[static_cast<size_t>(ci)];
    chunk.selected_count.assign(static_cast<size_t>(n), 0);
    for (std::int64_t m = begin; m < end; ++m) {
      const Mask mask = static_cast<Mask>(m);
      const SamplePhase phase = make_sample_phase(instance, mask_elements(mask, n));
      const std::vector<ElementId> picked = run_free_order(instance, phase);

      if (!instance.matroid().is_independent(picked)) {
        chunk.violations.push_back("dependent output at sample " + mask_string(mask, n));
      }
      std::vector<std::uint8_t> in_picked(static_cast<size_t>(n), 0);
      for (ElementId f : picked) {
        in_picked[static_cast<size_t>(f)] = 1;
        ++chunk.selected_count[static_cast<size_t>(f)];
        // Accepted elements must improve the sample optimum.
        std::vector<ElementId> heavier_sampled;
        for (ElementId a : phase.sample) {
          if (instance.heavier(a, f)) heavier_sampled.push_back(a);
        }
        if (oracle_in_span(instance.matroid(), heavier_sampled, f)) {
          chunk.violations.push_back("non-improving element " + std::to_string(f) +
                                     " accepted at sample " + mask_string(mask, n));
        }
      }
      chunk.weight_sum += instance.weight_of(picked);

      for (size_t oi = 0; oi < report.opt.size(); ++oi) {
        const ElementId f = report.opt[oi];
        const JIndices oracle = oracle_j_indices(instance, mask, f);
        const JIndices module = j_indices(instance, phase.in_sample, f);
        if (oracle.j1 != module.j1 || oracle.j2 != module.j2) {
          chunk.violations.push_back("span index mismatch for element " + std::to_string(f) +
                                     " at sample " + mask_string(mask, n));
        }
        condition[oi][mask] = oracle.j1 <= oracle.j2 ? 1 : 0;
        const bool sampled = (mask & (Mask{1} << f)) != 0;
        if (!sampled && oracle.j1 <= oracle.j2 && !in_picked[static_cast<size_t>(f)]) {
          chunk.violations.push_back("selection guarantee failed for element " +
                                     std::to_string(f) + " at sample " + mask_string(mask, n));
        }
      }
    }
  });

  std::vector<std::int64_t> selected_count(static_cast<size_t>(n), 0);
  double weight_sum = 0.0;
  for (const Chunk& chunk : chunks) {
    for (int f = 0; f < n; ++f) selected_count[static_cast<size_t>(f)] += chunk.selected_count[static_cast<size_t>(f)];
    weight_sum += chunk.weight_sum;
    report.violations.insert(report.violations.end(), chunk.violations.begin(),
                             chunk.violations.end());
  }

  for (size_t oi = 0; oi < report.opt.size(); ++oi) {
    for (Mask mask = 0; mask < total; ++mask) {
      const Mask complement = ~mask & (total - 1);
      if (mask > complement) continue;
      if (!condition[oi][mask] && !condition[oi][complement]) {
        report.violations.push_back("complement symmetry failed for element " +
                                    std::to_string(report.opt[oi]) + " at split " +
                                    mask_string(mask, n));
      }
    }
  }

  const double scale = 1.0 / static_cast<double>(total);
  report.selection_prob.resize(static_cast<size_t>(n));
  for (int f = 0; f < n; ++f) {
    report.selection_prob[static_cast<size_t>(f)] =
        static_cast<double>(selected_count[static_cast<size_t>(f)]) * scale;
  }
  report.expected_weight = weight_sum * scale;
  report.ratio = report.expected_weight > 0 ? report.opt_weight / report.expected_weight : 0.0;
  return report;
}

// ---------------------------------------------------------------------------
// Threshold rule selection distribution

std::vector<double> selection_dist_by_rank(int m, int r) {
  if (m < 1 || r < 0 || r >= m) {
    throw std::invalid_argument("selection_dist_by_rank: need 0 <= r < m");
  }
  std::vector<double> dist(static_cast<size_t>(m), 0.0);
  if (r == 0) {
    // The first arrival is always taken and is uniform over the part.
    std::fill(dist.begin(), dist.end(), 1.0 / static_cast<double>(m));
    return dist;
  }
  // The arrival at position j is selected iff it beats the whole prefix and
  // the best of the first j-1 sits inside the observed sample. For the
  // rank-rho element at position j that means the rho-1 stronger ranks all
  // land after j:
  //
  //   P[rank rho at j, stronger ranks after j]
  //     = prod_{i=0}^{rho-2} (m-j-i) / prod_{i=0}^{rho-1} (m-i),
  //
  // and conditioned on that, the best of the first j-1 positions is uniform
  // among them, hence in the sample with probability r/(j-1).
  for (int rho = 1; rho <= m; ++rho) {
    double p = 0.0;
    for (int j = r + 1; j <= m; ++j) {
      double placement = 1.0;
      for (int i = 0; i <= rho - 2; ++i) {
        placement *= static_cast<double>(m - j - i);
      }
      for (int i = 0; i <= rho - 1; ++i) {
        placement /= static_cast<double>(m - i);
      }
      if (placement <= 0.0) continue;
      p += placement * static_cast<double>(r) / static_cast<double>(j - 1);
    }
    dist[static_cast<size_t>(rho - 1)] = p;
  }
  return dist;
}

std::vector<double> secretary_selection_dist(std::span<const double> keys, int r) {
  const int m = static_cast<int>(keys.size());
  if (m < 1 || r < 0 || r >= m) {
    throw std::invalid_argument("secretary_selection_dist: need 0 <= r < |keys|");
  }
  if (m > 8) {
    throw std::invalid_argument("secretary_selection_dist: enumeration limited to 8 keys");
  }
  const std::vector<double> key_vec(keys.begin(), keys.end());
  const WeightOrdering order(&key_vec);

  std::vector<ElementId> arrival(static_cast<size_t>(m));
  std::iota(arrival.begin(), arrival.end(), 0);
  std::vector<std::int64_t> counts(static_cast<size_t>(m), 0);
  std::int64_t orders = 0;
  do {
    ThresholdRule rule(m, r, order);
    for (ElementId e : arrival) rule.feed(e);
    if (rule.has_selected()) ++counts[static_cast<size_t>(rule.selection())];
    ++orders;
  } while (std::next_permutation(arrival.begin(), arrival.end()));

  std::vector<double> dist(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    dist[static_cast<size_t>(i)] =
        static_cast<double>(counts[static_cast<size_t>(i)]) / static_cast<double>(orders);
  }
  return dist;
}

// ---------------------------------------------------------------------------
// Laminar enumeration

namespace {

// Interval partition re-derived from the flat family: for each element take
// the smallest family set containing it that meets the anchors, then the
// nearest anchor inside, preferring the one at or before the element.
// Returns anchor index per element (anchors listed by position).
std::vector<int> oracle_interval_assignment(const LaminarTree& tree,
                                            const std::vector<int>& anchor_pos) {
  const int n = tree.n();
  std::vector<const LaminarSet*> by_size;
  for (const LaminarSet& set : tree.family()) by_size.push_back(&set);
  std::sort(by_size.begin(), by_size.end(), [](const LaminarSet* a, const LaminarSet* b) {
    return a->members.size() < b->members.size();
  });

  std::vector<std::uint8_t> is_anchor_pos(static_cast<size_t>(n), 0);
  for (int p : anchor_pos) is_anchor_pos[static_cast<size_t>(p)] = 1;

  std::vector<int> assignment(static_cast<size_t>(n), -1);
  for (int pos = 0; pos < n; ++pos) {
    const ElementId f = tree.order()[static_cast<size_t>(pos)];
    for (const LaminarSet* set : by_size) {
      bool contains_f = false;
      int before = -1;
      int after = -1;
      for (ElementId g : set->members) {
        if (g == f) contains_f = true;
        const int gp = tree.position()[static_cast<size_t>(g)];
        if (is_anchor_pos[static_cast<size_t>(gp)]) {
          if (gp <= pos && gp > before) before = gp;
          if (gp > pos && (after == -1 || gp < after)) after = gp;
        }
      }
      if (!contains_f || (before == -1 && after == -1)) continue;
      const int chosen = before != -1 ? before : after;
      assignment[static_cast<size_t>(pos)] = static_cast<int>(
          std::lower_bound(anchor_pos.begin(), anchor_pos.end(), chosen) - anchor_pos.begin());
      break;
    }
  }
  return assignment;
}

struct OraclePartition {
  // Parts listed by anchor (interval) or gap index (odd/even), as element
  // lists; may be empty before filtering.
  std::vector<std::vector<ElementId>> parts;
};

std::vector<std::vector<ElementId>> strip_and_drop(const OraclePartition& partition,
                                                   const std::vector<std::uint8_t>& in_sample) {
  std::vector<std::vector<ElementId>> parts;
  for (const auto& part : partition.parts) {
    std::vector<ElementId> kept;
    for (ElementId f : part) {
      if (!in_sample[static_cast<size_t>(f)]) kept.push_back(f);
    }
    if (!kept.empty()) parts.push_back(std::move(kept));
  }
  return parts;
}

std::vector<std::vector<ElementId>> canonical_parts(std::vector<std::vector<ElementId>> parts) {
  for (auto& part : parts) std::sort(part.begin(), part.end());
  std::sort(parts.begin(), parts.end());
  return parts;
}

// Every picking of at most one element per part must be independent. A
// dependent prefix is already a violating picking, so the search prunes on
// the first failure.
bool all_transversals_independent(const Matroid& matroid,
                                  const std::vector<std::vector<ElementId>>& parts,
                                  std::vector<ElementId>* witness) {
  std::vector<ElementId> picked;
  auto recurse = [&](auto&& self, size_t level) -> bool {
    if (!matroid.is_independent(picked)) {
      if (witness != nullptr) *witness = picked;
      return false;
    }
    if (level == parts.size()) return true;
    if (!self(self, level + 1)) return false;  // skip this part
    for (ElementId f : parts[level]) {
      picked.push_back(f);
      const bool ok = self(self, level + 1);
      picked.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return recurse(recurse, 0);
}

double transversal_count(const std::vector<std::vector<ElementId>>& parts) {
  double count = 1.0;
  for (const auto& part : parts) count *= static_cast<double>(part.size() + 1);
  return count;
}

}  // namespace

ExactReport exact_laminar(const Instance& instance, LaminarAlgorithm algorithm, double q,
                          int threads) {
  const int n = instance.n();
  if (n > 14) throw std::invalid_argument("exact_laminar: ground set too large (n <= 14)");
  const LaminarTree& tree = laminar_tree_of(instance);

  const bool simple = algorithm == LaminarAlgorithm::kSimple;
  if (q < 0.0) q = simple ? kSimpleSampleProb : kImprovedSampleProb;
  if (!(q > 0.0 && q < 1.0)) {
    throw std::invalid_argument("exact_laminar: q must lie in (0, 1)");
  }

  ExactReport report;
  report.instance_name = instance.name();
  report.algorithm = simple ? "laminar-simple" : "laminar-improved";
  report.q = q;
  report.opt = brute_opt(instance);
  report.opt_weight = instance.weight_of(report.opt);

  const std::vector<std::uint8_t> in_opt = [&] {
    std::vector<std::uint8_t> v(static_cast<size_t>(n), 0);
    for (ElementId f : report.opt) v[static_cast<size_t>(f)] = 1;
    return v;
  }();

  const Mask total = Mask{1} << n;
  std::vector<double> pow_q(static_cast<size_t>(n + 1)), pow_1mq(static_cast<size_t>(n + 1));
  pow_q[0] = pow_1mq[0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    pow_q[static_cast<size_t>(i)] = pow_q[static_cast<size_t>(i - 1)] * q;
    pow_1mq[static_cast<size_t>(i)] = pow_1mq[static_cast<size_t>(i - 1)] * (1.0 - q);
  }

  struct Chunk {
    std::vector<double> selection_prob;
    std::vector<double> solitary_prob;
    std::vector<double> z_expectation;
    double expected_weight = 0.0;
    double part_max_expected = 0.0;
    bool transversals_checked = true;
    std::vector<std::string> violations;
  };

  const std::int64_t chunk_size = 1024;
  std::vector<Chunk> chunks(static_cast<size_t>(chunk_count(total, chunk_size)));
  const double budget_per_mask = 3.0e7 / static_cast<double>(total);

  for_each_chunk(total, chunk_size, threads, [&](std::int64_t begin, std::int64_t end, int ci) {
    Chunk& chunk = chunks[static_cast<size_t>(ci)];
    chunk.selection_prob.assign(static_cast<size_t>(n), 0.0);
    chunk.solitary_prob.assign(static_cast<size_t>(n), 0.0);
    chunk.z_expectation.assign(static_cast<size_t>(n), 0.0);

    for (std::int64_t mi = begin; mi < end; ++mi) {
      const Mask mask = static_cast<Mask>(mi);
      const std::vector<ElementId> sample = mask_elements(mask, n);
      std::vector<std::uint8_t> in_sample(static_cast<size_t>(n), 0);
      for (ElementId f : sample) in_sample[static_cast<size_t>(f)] = 1;
      const double mask_prob = pow_q[sample.size()] * pow_1mq[static_cast<size_t>(n) - sample.size()];

      const std::vector<ElementId> opt_a = greedy_max_weight(instance, sample);
      std::vector<int> anchor_pos;
      for (ElementId f : opt_a) anchor_pos.push_back(tree.position()[static_cast<size_t>(f)]);
      std::sort(anchor_pos.begin(), anchor_pos.end());

      // Scheme branches with their probabilities, derived from the interval
      // definitions; checked against the algorithm module's schemes below.
      struct Branch {
        double prob;
        std::vector<std::vector<ElementId>> parts;
      };
      std::vector<Branch> branches;

      if (simple) {
        if (opt_a.empty()) {
          Branch branch;
          branch.prob = mask_prob;
          std::vector<ElementId> rest;
          for (ElementId f = 0; f < n; ++f) {
            if (!in_sample[static_cast<size_t>(f)]) rest.push_back(f);
          }
          if (!rest.empty()) branch.parts.push_back(std::move(rest));
          branches.push_back(std::move(branch));
        } else {
          Branch odd, even;
          odd.prob = even.prob = mask_prob * 0.5;
          const int p = static_cast<int>(anchor_pos.size());
          for (int j = 1; j <= p + 1; ++j) {
            const int lo = j == 1 ? 0 : anchor_pos[static_cast<size_t>(j - 2)];
            const int hi = j == p + 1 ? n - 1 : anchor_pos[static_cast<size_t>(j - 1)];
            std::vector<ElementId> part;
            for (int pos = lo; pos <= hi; ++pos) {
              const ElementId f = tree.order()[static_cast<size_t>(pos)];
              if (!in_sample[static_cast<size_t>(f)]) part.push_back(f);
            }
            if (part.empty()) continue;
            (j % 2 == 1 ? odd : even).parts.push_back(std::move(part));
          }
          // Cross-check against the module's construction.
          const OddEvenFamilies module_families = odd_even_parts(instance, in_sample, opt_a);
          if (canonical_parts(odd.parts) != canonical_parts(module_families.odd.parts) ||
              canonical_parts(even.parts) != canonical_parts(module_families.even.parts)) {
            chunk.violations.push_back("gap partition mismatch at sample " + mask_string(mask, n));
          }
          branches.push_back(std::move(odd));
          branches.push_back(std::move(even));
        }
      } else {
        const std::vector<int> assignment = oracle_interval_assignment(tree, anchor_pos);
        OraclePartition full;
        if (anchor_pos.empty()) {
          std::vector<ElementId> all(static_cast<size_t>(n));
          std::iota(all.begin(), all.end(), 0);
          full.parts.push_back(std::move(all));
        } else {
          full.parts.resize(anchor_pos.size());
          for (int pos = 0; pos < n; ++pos) {
            full.parts[static_cast<size_t>(assignment[static_cast<size_t>(pos)])].push_back(
                tree.order()[static_cast<size_t>(pos)]);
          }
        }

        // Interval shape: each part one contiguous block containing its anchor.
        for (size_t ai = 0; ai < anchor_pos.size(); ++ai) {
          const auto& part = full.parts[ai];
          int lo = n, hi = -1;
          bool holds_anchor = false;
          for (ElementId f : part) {
            const int pos = tree.position()[static_cast<size_t>(f)];
            lo = std::min(lo, pos);
            hi = std::max(hi, pos);
            if (pos == anchor_pos[ai]) holds_anchor = true;
          }
          if (!holds_anchor || hi - lo + 1 != static_cast<int>(part.size())) {
            chunk.violations.push_back("interval part malformed at sample " + mask_string(mask, n));
          }
        }
        // Coverage: a family set meeting the anchors is covered by the parts
        // of its own anchors.
        for (const LaminarSet& set : tree.family()) {
          std::vector<std::uint8_t> anchor_in_set(anchor_pos.size(), 0);
          bool meets = false;
          for (ElementId g : set.members) {
            const int gp = tree.position()[static_cast<size_t>(g)];
            const auto it = std::lower_bound(anchor_pos.begin(), anchor_pos.end(), gp);
            if (it != anchor_pos.end() && *it == gp) {
              anchor_in_set[static_cast<size_t>(it - anchor_pos.begin())] = 1;
              meets = true;
            }
          }
          if (!meets) continue;
          for (ElementId g : set.members) {
            const int gp = tree.position()[static_cast<size_t>(g)];
            if (!anchor_in_set[static_cast<size_t>(assignment[static_cast<size_t>(gp)])]) {
              chunk.violations.push_back("coverage failed for element " + std::to_string(g) +
                                         " at sample " + mask_string(mask, n));
            }
          }
        }

        Branch branch;
        branch.prob = mask_prob;
        branch.parts = strip_and_drop(full, in_sample);
        const PartitionScheme module_scheme = improved_scheme(instance, in_sample, opt_a);
        if (canonical_parts(branch.parts) != canonical_parts(module_scheme.parts)) {
          chunk.violations.push_back("interval scheme mismatch at sample " + mask_string(mask, n));
        }

        // Feasibility of the full interval partition (any at-most-one-per-
        // part picking over all of N); the stripped scheme's transversals
        // are a subset of these.
        if (transversal_count(full.parts) <= budget_per_mask) {
          std::vector<ElementId> witness;
          if (!all_transversals_independent(instance.matroid(), full.parts, &witness)) {
            std::string s = "{";
            for (size_t i = 0; i < witness.size(); ++i) {
              if (i > 0) s += ",";
              s += std::to_string(witness[i]);
            }
            chunk.violations.push_back("dependent transversal " + s + " of the full partition at sample " +
                                       mask_string(mask, n));
          }
        } else {
          chunk.transversals_checked = false;
        }

        // Z accounting over the sample only.
        for (ElementId f : report.opt) {
          if (in_sample[static_cast<size_t>(f)]) continue;
          for (const auto& part : branch.parts) {
            if (std::find(part.begin(), part.end(), f) == part.end()) continue;
            int opt_in_part = 0;
            for (ElementId g : part) opt_in_part += in_opt[static_cast<size_t>(g)];
            chunk.z_expectation[static_cast<size_t>(f)] +=
                mask_prob / static_cast<double>(opt_in_part);
            break;
          }
        }
        branches.push_back(std::move(branch));
      }

      for (const Branch& branch : branches) {
        // Feasibility of the gap families: any one-per-part picking stays
        // independent. (The improved procedure was already checked against
        // its full partition above.)
        if (simple) {
          if (transversal_count(branch.parts) <= budget_per_mask) {
            std::vector<ElementId> witness;
            if (!all_transversals_independent(instance.matroid(), branch.parts, &witness)) {
              std::string s = "{";
              for (size_t i = 0; i < witness.size(); ++i) {
                if (i > 0) s += ",";
                s += std::to_string(witness[i]);
              }
              chunk.violations.push_back("dependent transversal " + s + " at sample " +
                                         mask_string(mask, n));
            }
          } else {
            chunk.transversals_checked = false;
          }
        }

        for (const auto& part : branch.parts) {
          const int m = static_cast<int>(part.size());
          std::vector<ElementId> by_weight(part);
          std::sort(by_weight.begin(), by_weight.end(), instance.ordering());
          const std::vector<double> dist = selection_dist_by_rank(m, threshold_index(m));
          for (int rho = 0; rho < m; ++rho) {
            const ElementId f = by_weight[static_cast<size_t>(rho)];
            const double p = branch.prob * dist[static_cast<size_t>(rho)];
            chunk.selection_prob[static_cast<size_t>(f)] += p;
            chunk.expected_weight += p * instance.weight(f);
          }

          int opt_in_part = 0;
          ElementId only_opt = -1;
          for (ElementId g : part) {
            if (in_opt[static_cast<size_t>(g)]) {
              ++opt_in_part;
              only_opt = g;
            }
          }
          if (opt_in_part >= 1) {
            chunk.part_max_expected += branch.prob * instance.weight(by_weight[0]);
          }
          if (simple && opt_in_part == 1) {
            chunk.solitary_prob[static_cast<size_t>(only_opt)] += branch.prob;
          }
        }
      }
    }
  });

  report.selection_prob.assign(static_cast<size_t>(n), 0.0);
  report.solitary_prob.assign(static_cast<size_t>(n), 0.0);
  report.z_expectation.assign(static_cast<size_t>(n), 0.0);
  report.transversals_checked = true;
  for (const Chunk& chunk : chunks) {
    for (int f = 0; f < n; ++f) {
      report.selection_prob[static_cast<size_t>(f)] += chunk.selection_prob[static_cast<size_t>(f)];
      report.solitary_prob[static_cast<size_t>(f)] += chunk.solitary_prob[static_cast<size_t>(f)];
      report.z_expectation[static_cast<size_t>(f)] += chunk.z_expectation[static_cast<size_t>(f)];
    }
    report.expected_weight += chunk.expected_weight;
    report.part_max_expected += chunk.part_max_expected;
    report.transversals_checked = report.transversals_checked && chunk.transversals_checked;
    report.violations.insert(report.violations.end(), chunk.violations.begin(),
                             chunk.violations.end());
  }
  report.ratio = report.expected_weight > 0 ? report.opt_weight / report.expected_weight : 0.0;
  return report;
}

}  // namespace matsec

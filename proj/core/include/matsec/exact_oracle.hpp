#pragma once

#include <span>
#include <string>
#include <vector>

#include "matsec/instance.hpp"

namespace matsec {

// Exact, enumeration-based accounting for one algorithm on one instance.
// Wherever possible the quantities here are recomputed from first
// principles (rank-based spans, the partition definitions re-derived from
// the flat family) rather than through the algorithm modules, so agreement
// between the two sides is evidence, not tautology.
struct ExactReport {
  std::string instance_name;
  std::string algorithm;  // free-order | laminar-simple | laminar-improved
  double q = 0.5;         // sampling probability used

  std::vector<ElementId> opt;
  double opt_weight = 0.0;
  double expected_weight = 0.0;
  double ratio = 0.0;  // opt_weight / expected_weight

  std::vector<double> selection_prob;  // per element

  // Laminar accounting. solitary_prob: probability the element is the only
  // optimum element of some kept part (simple procedure). z_expectation:
  // E[Z(f)] with Z(f) = 0 when f is sampled, else 1/|P_f ∩ OPT| (improved
  // procedure). part_max_expected: E[sum over parts meeting OPT of the part
  // maximum weight].
  std::vector<double> solitary_prob;
  std::vector<double> z_expectation;
  double part_max_expected = 0.0;

  std::vector<std::string> violations;  // failed structural checks, verbatim
  bool transversals_checked = false;
};

// Maximum-weight independent set by enumerating all 2^n subsets under the
// tie-broken ordering. Ground truth for greedy; n <= 20.
std::vector<ElementId> brute_opt(const Instance& instance);

struct AxiomCheckResult {
  bool pass = true;
  std::string failure;
  std::vector<ElementId> witness_a;  // independent set whose subset/exchange fails
  std::vector<ElementId> witness_b;
};

// Exhaustive downward-closure and exchange check over the subset lattice
// (exchange on |A| = |B| + 1, which with downward closure implies the general
// form). n <= 13.
AxiomCheckResult axiom_check(const Matroid& matroid);

// Runs the free order procedure once per sample set (all 2^n, each with
// probability 2^-n), accumulating exact selection probabilities and expected
// weight, and checks per (sample, optimum element): the selection guarantee
// when the element is unsampled and its sampled-side span index does not
// exceed the unsampled-side one, plus the complement symmetry of those
// indices. Violations are reported, never swallowed. n <= 14.
ExactReport exact_free_order(const Instance& instance, int threads = 0);

enum class LaminarAlgorithm { kSimple, kImproved };

// Exact accounting for a laminar procedure: enumerates all 2^n sample sets
// (element sampled independently with probability q; q < 0 picks the
// algorithm's default) and the parity coin of the simple procedure, then
// composes with the exact per-part selection distribution of the threshold
// rule. Also re-derives every scheme from the interval definitions and
// checks transversal independence whenever the transversal count is small
// enough (always for n <= 10). n <= 14.
ExactReport exact_laminar(const Instance& instance, LaminarAlgorithm algorithm, double q = -1.0,
                          int threads = 0);

// Selection probability per element of one part under the threshold rule
// with sample size r, by enumerating all |keys|! arrival orders. Ties in
// the keys break toward the lower index. |keys| <= 8.
std::vector<double> secretary_selection_dist(std::span<const double> keys, int r);

// Same distribution by rank (0 = strongest key) from the closed form; any m.
// Cross-checked against the enumeration in the tests.
std::vector<double> selection_dist_by_rank(int m, int r);

}  // namespace matsec

#pragma once

#include <functional>
#include <vector>

#include "dplab/exact_math.hpp"
#include "dplab/rational.hpp"

namespace dplab {

/// Distribution of the medium-class size M when both pivots are drawn from
/// a random permutation of n >= 2 distinct elements:
/// P{M = m} = (n - m - 1) / C(n, 2) for 0 <= m <= n-2, else 0.
Rational pivot_class_pmf(unsigned n, unsigned m);

/// E[M] = (n - 2) / 3 for n >= 2.
Rational expected_medium(unsigned n);

/// E|L - S|, by direct summation over all triples (s, m, l) with
/// s + m + l = n - 2 (uniformly distributed).
Rational expected_abs_large_minus_small(unsigned n);

/// E[Z^up over the random skeleton length n-2-M]:
///   (1 / (2 C(n,2))) * sum_{m=0}^{n-2} (m+1) H^odd_m,  for n >= 2.
Rational expected_upzero_mixture(unsigned n);

/// Expected partitioning cost of strategy "Count" for n >= 2:
/// (3/2)n + (1/2)H^odd_n - 19/8 - 3[n odd]/(8n) - [n even]/(8(n-1)).
Rational partition_cost_count(unsigned n);

/// Expected partitioning cost of the oracle strategy for n >= 2:
/// (3/2)n - (1/2)H^odd_n - 13/8 + 3[n odd]/(8n) + [n even]/(8(n-1)).
Rational partition_cost_clairvoyant(unsigned n);

/// The same quantity as partition_cost_count, assembled from its pieces:
/// 1 + (3/2)(n-2) + E[M]/2 + upzero mixture - E|L-S|/2.
Rational partition_cost_decomposed(unsigned n);

/// Exact expected costs, partition step and full sort, for 0..n_max.
struct CostTable {
  std::vector<Rational> partition;  // partition[n]; 0 for n < 2
  std::vector<Rational> total;      // total[n]; total[0] = total[1] = 0
};

/// Solves E[C_n] = E[P_n] + (3 / C(n,2)) * sum_{k=1}^{n-2} (n-1-k) E[C_k]
/// bottom-up with running prefix sums (O(n_max) rational operations).
CostTable solve_recurrence(const std::function<Rational(unsigned)>& partition,
                           unsigned n_max);

/// Average total comparison count of the "Count" quicksort, closed form for
/// n >= 4; smaller n delegate to the recurrence.
Rational total_cost_count_closed(unsigned n);

/// Same for the oracle variant.
Rational total_cost_clairvoyant_closed(unsigned n);

/// Classical single-pivot quicksort average: 2(n+1)H_n - 4n.
Rational classic_cost(unsigned n);

enum class Variant { count, clairvoyant };

/// Coefficients of the expansion
///   (9/5) n log n + A n + B log n + C + D/n + E/n^2 + (F [n even] + G)/n^3.
struct AsymptoticExpansion {
  double a, b, c, d, e, f, g;

  double eval(unsigned n) const;
};

AsymptoticExpansion asymptotic_expansion(Variant variant);

/// Evaluates the expansion for the chosen variant at n >= 1.
double asymptotic_total(Variant variant, unsigned n);

}  // namespace dplab

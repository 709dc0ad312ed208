#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "dplab/exact_math.hpp"
#include "dplab/rational.hpp"
#include "dplab/rng.hpp"

namespace dplab {

/// A walk on Z^2 made of steps +1 (up) and -1 (down), starting at height 0.
///
/// Random paths are drawn from a two-stage model: first the ending height is
/// chosen uniformly among the n+1 feasible values, then a path is chosen
/// uniformly among all paths reaching that height. This is *not* the uniform
/// model over all 2^n step words.
struct LatticePath {
  std::vector<std::int8_t> steps;

  std::size_t length() const { return steps.size(); }
  long endpoint() const {
    long d = 0;
    for (auto s : steps) d += s;
    return d;
  }
};

struct PathStats {
  unsigned zeros = 0;          // indices t with height(t) == 0, including t = 0
  unsigned up_from_zero = 0;   // t < n with height(t) == 0 followed by an up-step
};

PathStats path_stats(const LatticePath& path);

/// Draws a path of length n from the two-stage model. The ending height is
/// sampled as n - 2*l with l uniform on {0..n}; the step order is a uniform
/// shuffle of the resulting step multiset.
LatticePath sample_path(unsigned n, SplitMix64& rng);

/// State of the draw-and-duplicate urn with h colors: counts[j] balls of
/// color j have been drawn after t = sum(counts) steps.
struct UrnState {
  std::vector<unsigned> counts;

  unsigned t() const {
    unsigned sum = 0;
    for (unsigned c : counts) sum += c;
    return sum;
  }
};

/// Probability that color j is drawn next: (counts[j] + 1) / (t + h).
Rational urn_transition_probability(const UrnState& state, unsigned color);

/// Samples an n-step trajectory (states at t = 0..n) of the urn chain.
/// For h = 2 the induced +1/-1 path (color 0 = up) has the same law as
/// sample_path(n).
std::vector<UrnState> sample_path_urn(unsigned h, unsigned n, SplitMix64& rng);

/// Exact forward propagation of the urn transition law for n steps;
/// returns the distribution over endpoint count vectors.
std::map<std::vector<unsigned>, Rational> urn_endpoint_distribution(unsigned h, unsigned n);

/// Exact probability of one specific color word under the urn chain.
Rational urn_path_probability(unsigned h, const std::vector<unsigned>& colors);

/// Expected number of zeros, evaluated as the double sum
///   4/(n+1) * sum_{0<=k<l<ceil(n/2)} C(n,k)/C(n,l)
///   + [n even]/(n+1) * (2^n/C(n,n/2) - 1) + 1.
Rational expected_zeros_double_sum(unsigned n);

/// Expected number of zeros in closed form: H^odd_{n+1}.
Rational expected_zeros_closed(unsigned n);

/// Expected number of up-from-zero situations: H^odd_n / 2.
Rational expected_up_from_zero(unsigned n);

/// Probability that a random path of length n passes through (t, k):
/// 1/(t+1) when |k| <= t and k = t (mod 2), else 0. Requires t <= n.
Rational point_probability(unsigned n, unsigned t, long k);

/// Expected number of zeros beyond the origin among paths ending at (n, d).
/// Rejects endpoints with |d| > n or d != n (mod 2).
Rational conditional_expected_zeros(unsigned n, long d);

/// P{exactly r zeros} for a random path of length n, r >= 1 (exact).
Rational zeros_distribution(unsigned n, unsigned r);

/// Four independently evaluated expressions that must agree for every n:
/// the double sum above, a second double sum over C(2*floor(n/2)+1, .),
/// a sum over first-return decompositions, and H^odd_{n+1}.
std::array<Rational, 4> identity_quadruple(unsigned n);

/// Brute-force statistics over all 2^n step words, each weighted by the
/// two-stage model: weight = 1/((n+1) * C(n, #down-steps)). Serves as the
/// independent oracle for every expectation and distribution above.
/// Practical for n up to ~20; intended range n <= 14.
struct ExhaustiveStats {
  Rational expected_zeros;
  Rational expected_up_from_zero;
  std::vector<Rational> zero_count_pmf;  // index r, entry P{Z = r}; index 0 unused
  // point_hit[t][j] = P{height at t equals -t + 2j}
  std::vector<std::vector<Rational>> point_hit;
};

ExhaustiveStats enumerate_paths(unsigned n);

}  // namespace dplab

#pragma once

#include <cstdint>
#include <vector>

#include "dplab/rational.hpp"

namespace dplab {

inline constexpr double kEulerGamma = 0.5772156649015328606;
inline constexpr double kLog2 = 0.6931471805599453094;

enum class HarmonicKind { plain, odd, alternating };

/// n-th harmonic number of the requested kind, exact.
///
/// plain       sum of 1/m for m = 1..n
/// odd         sum of 1/m over odd m <= n
/// alternating sum of (-1)^m / m for m = 1..n
///
/// All kinds return 0 for n = 0. Values are served from memoized prefix
/// tables guarded by a mutex, so queries are O(1) amortized and safe to
/// issue from several threads.
Rational harmonic(HarmonicKind kind, unsigned n);

/// Floating-point expansion of the same quantities through the 1/n^2 term.
/// Requires n >= 1.
double harmonic_asymptotic(HarmonicKind kind, unsigned n);

/// Binomial coefficient C(n, k); 0 whenever k < 0 or k > n.
Int binomial(unsigned long n, long k);

/// The full row C(n, 0), ..., C(n, n).
std::vector<Int> binomial_row(unsigned long n);

/// n! / (parts[0]! * parts[1]! * ...). The parts must sum to n.
Int multinomial(unsigned long n, const std::vector<unsigned long>& parts);

Int factorial(unsigned long n);

/// 2^n.
Int pow2(unsigned long n);

}  // namespace dplab

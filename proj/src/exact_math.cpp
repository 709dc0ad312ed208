#include "dplab/exact_math.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace dplab {

namespace {

struct PrefixTable {
  std::mutex mutex;
  std::vector<Rational> values{Rational(0)};  // index 0 holds the empty sum
};

Rational term(HarmonicKind kind, unsigned long m) {
  switch (kind) {
    case HarmonicKind::plain:
      return Rational(Int(1), Int(m));
    case HarmonicKind::odd:
      return m % 2 == 1 ? Rational(Int(1), Int(m)) : Rational(0);
    case HarmonicKind::alternating:
      return m % 2 == 0 ? Rational(Int(1), Int(m)) : Rational(Int(-1), Int(m));
  }
  throw std::logic_error("harmonic: bad kind");
}

}  // namespace

Rational harmonic(HarmonicKind kind, unsigned n) {
  static PrefixTable tables[3];
  PrefixTable& table = tables[static_cast<int>(kind)];
  std::scoped_lock lock(table.mutex);
  while (table.values.size() <= n) {
    const unsigned long m = table.values.size();
    table.values.push_back(table.values.back() + term(kind, m));
  }
  return table.values[n];
}

double harmonic_asymptotic(HarmonicKind kind, unsigned n) {
  if (n == 0) throw std::invalid_argument("harmonic_asymptotic: n must be >= 1");
  const double x = static_cast<double>(n);
  const bool even = n % 2 == 0;
  switch (kind) {
    case HarmonicKind::plain:
      return std::log(x) + kEulerGamma + 1.0 / (2 * x) - 1.0 / (12 * x * x);
    case HarmonicKind::odd:
      return std::log(x) / 2 + (kEulerGamma + kLog2) / 2 +
             (even ? 0.0 : 1.0 / (2 * x)) + ((even ? 3.0 : 0.0) - 2.0) / (12 * x * x);
    case HarmonicKind::alternating: {
      const double sign = even ? 1.0 : -1.0;
      return -kLog2 + sign / (2 * x) - sign / (4 * x * x);
    }
  }
  throw std::logic_error("harmonic_asymptotic: bad kind");
}

Int binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return Int(0);
  Int result;
  mpz_bin_uiui(result.get_mpz_t(), n, static_cast<unsigned long>(k));
  return result;
}

std::vector<Int> binomial_row(unsigned long n) {
  std::vector<Int> row(n + 1);
  row[0] = 1;
  for (unsigned long k = 1; k <= n; ++k) {
    row[k] = row[k - 1] * Int(n - k + 1);
    mpz_divexact_ui(row[k].get_mpz_t(), row[k].get_mpz_t(), k);
  }
  return row;
}

Int multinomial(unsigned long n, const std::vector<unsigned long>& parts) {
  unsigned long sum = 0;
  for (unsigned long p : parts) sum += p;
  if (sum != n) throw std::invalid_argument("multinomial: parts must sum to n");
  Int result(1);
  unsigned long used = 0;
  for (unsigned long p : parts) {
    used += p;
    result *= binomial(used, static_cast<long>(p));
  }
  return result;
}

Int factorial(unsigned long n) {
  Int result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Int pow2(unsigned long n) {
  Int result;
  mpz_ui_pow_ui(result.get_mpz_t(), 2, n);
  return result;
}

}  // namespace dplab

#include "dplab/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace dplab {

namespace {

void require_n_at_least_2(unsigned n, const char* who) {
  if (n < 2) throw std::invalid_argument(std::string(who) + ": n must be >= 2");
}

}  // namespace

Rational pivot_class_pmf(unsigned n, unsigned m) {
  require_n_at_least_2(n, "pivot_class_pmf");
  if (m > n - 2) return Rational(0);
  return Rational(Int(n - m - 1), binomial(n, 2));
}

Rational expected_medium(unsigned n) {
  require_n_at_least_2(n, "expected_medium");
  return Rational(Int(n - 2), Int(3));
}

Rational expected_abs_large_minus_small(unsigned n) {
  require_n_at_least_2(n, "expected_abs_large_minus_small");
  const long top = static_cast<long>(n) - 2;
  Int sum(0);
  for (long s = 0; s <= top; ++s)
    for (long l = 0; l <= top - s; ++l) sum += Int(l >= s ? l - s : s - l);
  return Rational(sum, binomial(n, 2));
}

Rational expected_upzero_mixture(unsigned n) {
  require_n_at_least_2(n, "expected_upzero_mixture");
  Rational sum(0);
  for (unsigned m = 0; m <= n - 2; ++m)
    sum += Rational(Int(m + 1)) * harmonic(HarmonicKind::odd, m);
  return sum / Rational(2 * binomial(n, 2));
}

Rational partition_cost_count(unsigned n) {
  require_n_at_least_2(n, "partition_cost_count");
  Rational cost = Rational(3 * static_cast<long>(n), 2) +
                  harmonic(HarmonicKind::odd, n) / Rational(2) - Rational(19, 8);
  if (n % 2 == 1) cost -= Rational(Int(3), Int(8) * Int(n));
  else cost -= Rational(Int(1), Int(8) * Int(n - 1));
  return cost;
}

Rational partition_cost_clairvoyant(unsigned n) {
  require_n_at_least_2(n, "partition_cost_clairvoyant");
  Rational cost = Rational(3 * static_cast<long>(n), 2) -
                  harmonic(HarmonicKind::odd, n) / Rational(2) - Rational(13, 8);
  if (n % 2 == 1) cost += Rational(Int(3), Int(8) * Int(n));
  else cost += Rational(Int(1), Int(8) * Int(n - 1));
  return cost;
}

Rational partition_cost_decomposed(unsigned n) {
  require_n_at_least_2(n, "partition_cost_decomposed");
  return Rational(1) + Rational(3 * (static_cast<long>(n) - 2), 2) +
         expected_medium(n) / Rational(2) + expected_upzero_mixture(n) -
         expected_abs_large_minus_small(n) / Rational(2);
}

CostTable solve_recurrence(const std::function<Rational(unsigned)>& partition,
                           unsigned n_max) {
  CostTable table;
  table.partition.assign(n_max + 1, Rational(0));
  table.total.assign(n_max + 1, Rational(0));
  Rational sum_c(0);    // sum of E[C_k] for k <= n-2
  Rational sum_kc(0);   // sum of k * E[C_k] for k <= n-2
  for (unsigned n = 2; n <= n_max; ++n) {
    if (n >= 3) {
      const unsigned k = n - 2;
      sum_c += table.total[k];
      sum_kc += Rational(Int(k)) * table.total[k];
    }
    table.partition[n] = partition(n);
    const Rational weighted = Rational(Int(n - 1)) * sum_c - sum_kc;
    table.total[n] = table.partition[n] + Rational(3) * weighted / Rational(binomial(n, 2));
  }
  return table;
}

namespace {

Rational closed_form_small(unsigned n, Variant variant) {
  const auto partition = variant == Variant::count ? partition_cost_count
                                                   : partition_cost_clairvoyant;
  return solve_recurrence(partition, n).total[n];
}

}  // namespace

Rational total_cost_count_closed(unsigned n) {
  if (n < 4) return closed_form_small(n, Variant::count);
  const Rational h = harmonic(HarmonicKind::plain, n);
  const Rational h_alt = harmonic(HarmonicKind::alternating, n);
  const Rational nn{Int(n)};
  Rational cost = Rational(9, 5) * nn * h - Rational(1, 5) * nn * h_alt -
                  Rational(89, 25) * nn + Rational(67, 40) * h -
                  Rational(3, 40) * h_alt - Rational(83, 800);
  if (n % 2 == 0) {
    cost += Rational(1, 10);
    cost -= (Rational(Int(1), Int(n - 3)) + Rational(Int(3), Int(n - 1))) / Rational(320);
  } else {
    cost -= Rational(1, 10);
    cost += (Rational(Int(3), Int(n - 2)) + Rational(Int(1), Int(n))) / Rational(320);
  }
  return cost;
}

Rational total_cost_clairvoyant_closed(unsigned n) {
  if (n < 4) return closed_form_small(n, Variant::clairvoyant);
  const Rational h = harmonic(HarmonicKind::plain, n);
  const Rational h_alt = harmonic(HarmonicKind::alternating, n);
  const Rational nn{Int(n)};
  Rational cost = Rational(9, 5) * nn * h + Rational(1, 5) * nn * h_alt -
                  Rational(89, 25) * nn + Rational(77, 40) * h +
                  Rational(3, 40) * h_alt + Rational(67, 800);
  if (n % 2 == 0) {
    cost -= Rational(1, 10);
    cost += (Rational(Int(1), Int(n - 3)) + Rational(Int(3), Int(n - 1))) / Rational(320);
  } else {
    cost += Rational(1, 10);
    cost -= (Rational(Int(3), Int(n - 2)) + Rational(Int(1), Int(n))) / Rational(320);
  }
  return cost;
}

Rational classic_cost(unsigned n) {
  return Rational(2 * (static_cast<long>(n) + 1)) * harmonic(HarmonicKind::plain, n) -
         Rational(4 * static_cast<long>(n));
}

double AsymptoticExpansion::eval(unsigned n) const {
  const double x = static_cast<double>(n);
  const double lx = std::log(x);
  const double even = n % 2 == 0 ? 1.0 : 0.0;
  return 1.8 * x * lx + a * x + b * lx + c + d / x + e / (x * x) +
         (f * even + g) / (x * x * x);
}

AsymptoticExpansion asymptotic_expansion(Variant variant) {
  if (variant == Variant::count) {
    return {
        /*a=*/1.8 * kEulerGamma + 0.2 * kLog2 - 89.0 / 25.0,
        /*b=*/67.0 / 40.0,
        /*c=*/67.0 / 40.0 * kEulerGamma + 3.0 / 40.0 * kLog2 + 637.0 / 800.0,
        /*d=*/11.0 / 16.0,
        /*e=*/-67.0 / 480.0,
        /*f=*/-1.0 / 8.0,
        /*g=*/31.0 / 400.0,
    };
  }
  return {
      /*a=*/1.8 * kEulerGamma - 0.2 * kLog2 - 89.0 / 25.0,
      /*b=*/77.0 / 40.0,
      /*c=*/77.0 / 40.0 * kEulerGamma - 3.0 / 40.0 * kLog2 + 787.0 / 800.0,
      /*d=*/13.0 / 16.0,
      /*e=*/-77.0 / 480.0,
      /*f=*/1.0 / 8.0,
      /*g=*/-19.0 / 400.0,
  };
}

double asymptotic_total(Variant variant, unsigned n) {
  if (n == 0) throw std::invalid_argument("asymptotic_total: n must be >= 1");
  return asymptotic_expansion(variant).eval(n);
}

}  // namespace dplab

// Acceptance suite: runs every verification criterion end to end and prints
// one PASS/FAIL line per criterion. Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dplab/analysis.hpp"
#include "dplab/lattice_paths.hpp"
#include "dplab/optimality.hpp"
#include "dplab/report.hpp"
#include "dplab/simulate.hpp"
#include "dplab/sort.hpp"
#include "dplab/verify.hpp"

using namespace dplab;

namespace {

int g_failures = 0;

void report(int number, const std::string& title, bool ok, const std::string& detail,
            double seconds) {
  std::printf("%s: %2d. %s (%s) [%.2fs]\n", ok ? "PASS" : "FAIL", number,
              title.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

void criterion(int number, const std::string& title,
               const std::function<bool(std::string&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(number, title, ok, detail, seconds);
}

const CountStrategy kCount = [](const CountState& s) {
  return s.small >= s.large ? PivotFirst::p : PivotFirst::q;
};

bool sweep_matches(SortAlgo algo, const std::function<Rational(unsigned)>& reference,
                   std::string& detail) {
  for (unsigned n = 2; n <= 8; ++n) {
    const SweepResult sweep = permutation_sweep(n, algo, 2);
    if (sweep.average != reference(n)) {
      detail = "n=" + std::to_string(n) + ": sweep " + sweep.average.to_string() +
               " vs closed " + reference(n).to_string();
      return false;
    }
  }
  detail = "n=2..8 exact, anchor E[C_4] = " + reference(4).to_string();
  return true;
}

}  // namespace

int main() {
  criterion(1, "exact sorting cost of the count algorithm", [](std::string& detail) {
    if (total_cost_count_closed(4) != Rational(19, 4)) {
      detail = "anchor E[C_4] != 19/4";
      return false;
    }
    return sweep_matches(SortAlgo::count, total_cost_count_closed, detail);
  });

  criterion(2, "exact sorting cost of the oracle algorithm", [](std::string& detail) {
    return sweep_matches(SortAlgo::clairvoyant, total_cost_clairvoyant_closed, detail);
  });

  criterion(3, "recurrence agrees with both closed forms", [](std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    const CostTable count_table = solve_recurrence(partition_cost_count, 200);
    const CostTable oracle_table = solve_recurrence(partition_cost_clairvoyant, 200);
    for (unsigned n = 4; n <= 200; ++n) {
      if (count_table.total[n] != total_cost_count_closed(n)) {
        detail = "count mismatch at n=" + std::to_string(n);
        return false;
      }
      if (oracle_table.total[n] != total_cost_clairvoyant_closed(n)) {
        detail = "oracle mismatch at n=" + std::to_string(n);
        return false;
      }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    detail = "n=4..200 exact in " + format_decimal(seconds) + "s";
    return seconds < 1.0;
  });

  criterion(4, "zero-count identity", [](std::string& detail) {
    for (unsigned n = 0; n <= 300; ++n) {
      const auto quad = identity_quadruple(n);
      if (quad[0] != quad[1] || quad[0] != quad[2] || quad[0] != quad[3]) {
        detail = "mismatch at n=" + std::to_string(n);
        return false;
      }
      if (expected_zeros_double_sum(n) != expected_zeros_closed(n)) {
        detail = "double sum vs closed form at n=" + std::to_string(n);
        return false;
      }
    }
    detail = "four expressions equal for n=0..300";
    return true;
  });

  criterion(5, "zero-count distribution", [](std::string& detail) {
    for (unsigned n = 0; n <= 100; ++n) {
      Rational total(0), mean(0);
      for (unsigned r = 1; r <= n / 2 + 1; ++r) {
        const Rational p = zeros_distribution(n, r);
        total += p;
        mean += Rational(Int(r)) * p;
      }
      if (total != Rational(1) || mean != expected_zeros_closed(n)) {
        detail = "normalization or mean fails at n=" + std::to_string(n);
        return false;
      }
    }
    for (unsigned n = 0; n <= 14; ++n) {
      const ExhaustiveStats oracle = enumerate_paths(n);
      for (unsigned r = 1; r < oracle.zero_count_pmf.size(); ++r) {
        if (oracle.zero_count_pmf[r] != zeros_distribution(n, r)) {
          detail = "enumeration mismatch at n=" + std::to_string(n) +
                   ", r=" + std::to_string(r);
          return false;
        }
      }
    }
    for (unsigned r = 1; r <= 5; ++r) {
      const Rational gap =
          abs(zeros_distribution(400, r) - Rational(Int(1), Int(r) * Int(r + 1)));
      if (!(gap <= Rational(1, 100))) {
        detail = "limit law gap too large at r=" + std::to_string(r);
        return false;
      }
    }
    detail = "sums n<=100, enumeration n<=14, limit law at n=400";
    return true;
  });

  criterion(6, "count is an optimal strategy", [](std::string& detail) {
    const AdditionalCostProfile profile(kCount, 198);
    for (unsigned n = 2; n <= 200; ++n) {
      if (min_additional_cost(n) != profile.cost_for(n)) {
        detail = "dp vs count mismatch at n=" + std::to_string(n);
        return false;
      }
    }
    for (unsigned n = 3; n <= 5; ++n) {
      const EnumerationResult en = enumerate_strategies(n);
      if (en.minimum != min_additional_cost(n) || !en.count_attains ||
          !en.optima_match_count_off_ties) {
        detail = "exhaustive enumeration disagrees at n=" + std::to_string(n);
        return false;
      }
      if (n == 4 && en.minimum != Rational(7, 12)) {
        detail = "minimum at n=4 is not 7/12";
        return false;
      }
    }
    detail = "dp = count for n<=200; exhaustive minimum confirmed at n=3,4,5";
    return true;
  });

  criterion(7, "count dominates classical quicksort", [](std::string& detail) {
    for (unsigned n = 1; n <= 200; ++n) {
      const Rational count = total_cost_count_closed(n);
      const Rational classic = classic_cost(n);
      const bool should_be_equal = n <= 3;
      if (should_be_equal ? count != classic : !(count < classic)) {
        detail = "dominance fails at n=" + std::to_string(n);
        return false;
      }
    }
    detail = "n=1..200, equality exactly at n=1,2,3";
    return true;
  });

  criterion(8, "asymptotic expansions", [](std::string& detail) {
    const AsymptoticExpansion count = asymptotic_expansion(Variant::count);
    const double constants_count[] = {-2.3823823670652, 1.675, 1.81507227725206,
                                      0.6875, -0.1395833, -0.125, 0.0775};
    const double got_count[] = {count.a, count.b, count.c, count.d,
                                count.e, count.f, count.g};
    for (int i = 0; i < 7; ++i) {
      if (std::abs(got_count[i] - constants_count[i]) > 5e-8) {
        detail = "count constant #" + std::to_string(i) + " is off";
        return false;
      }
    }
    double worst = 0;
    for (const Variant variant : {Variant::count, Variant::clairvoyant}) {
      for (unsigned n : {50u, 100u, 200u, 400u}) {
        const Rational exact = variant == Variant::count
                                   ? total_cost_count_closed(n)
                                   : total_cost_clairvoyant_closed(n);
        const double scaled = std::abs(exact.to_double() - asymptotic_total(variant, n)) *
                              std::pow(static_cast<double>(n), 4);
        worst = std::max(worst, scaled);
        if (scaled >= 1.0) {
          detail = "error*n^4 = " + format_decimal(scaled) + " at n=" + std::to_string(n);
          return false;
        }
      }
    }
    detail = "constants pinned; max |error|*n^4 = " + format_decimal(worst) + " < 1";
    return true;
  });

  criterion(9, "samplers", [](std::string& detail) {
    for (unsigned n = 0; n <= 30; ++n) {
      const auto endpoints = urn_endpoint_distribution(2, n);
      if (endpoints.size() != n + 1) {
        detail = "wrong endpoint count at n=" + std::to_string(n);
        return false;
      }
      for (const auto& [counts, prob] : endpoints) {
        if (prob != Rational(Int(1), Int(n + 1))) {
          detail = "non-uniform endpoint at n=" + std::to_string(n);
          return false;
        }
      }
    }
    const auto rows = run_simulation(SimTarget::path_zeros, 1000, 100000, 20240229, 2);
    const auto rows_again = run_simulation(SimTarget::path_zeros, 1000, 100000, 20240229, 1);
    if (rows_to_csv(rows) != rows_to_csv(rows_again)) {
      detail = "seeded runs are not byte-identical";
      return false;
    }
    std::string zs;
    for (const auto& row : rows) {
      const double z = (*row.empirical - row.exact->to_double()) / *row.std_error;
      if (std::abs(z) > 3.0) {
        detail = row.quantity + " off by " + format_decimal(z) + " standard errors";
        return false;
      }
      zs += (zs.empty() ? "z = " : ", ") + format_decimal(z);
    }
    detail = "urn law uniform n<=30; 1e5 samples at n=1000 within 3 SE (" + zs + ")";
    return true;
  });

  criterion(10, "n! times the average cost is integral", [](std::string& detail) {
    for (unsigned n = 0; n <= 30; ++n) {
      const Rational count = Rational(factorial(n)) * total_cost_count_closed(n);
      const Rational oracle = Rational(factorial(n)) * total_cost_clairvoyant_closed(n);
      if (!count.is_integer() || !oracle.is_integer()) {
        detail = "denominator survives at n=" + std::to_string(n);
        return false;
      }
    }
    detail = "n=0..30, both variants";
    return true;
  });

  std::printf("%d of 10 criteria passed\n", 10 - g_failures);
  return g_failures;
}

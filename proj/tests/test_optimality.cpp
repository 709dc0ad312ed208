#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dplab/analysis.hpp"
#include "dplab/optimality.hpp"

using namespace dplab;

namespace {

const CountStrategy kCount = [](const CountState& s) {
  return s.small >= s.large ? PivotFirst::p : PivotFirst::q;
};

const CountStrategy kAlwaysP = [](const CountState&) { return PivotFirst::p; };

// The backward DP sweep to n = 200 is the expensive part; compute it once
// and share it across test cases.
const std::vector<Rational>& min_costs() {
  static const std::vector<Rational> costs = [] {
    std::vector<Rational> v(201);
    for (unsigned n = 2; n <= 200; ++n) v[n] = min_additional_cost(n);
    return v;
  }();
  return costs;
}

}  // namespace

TEST_CASE("next-symbol law") {
  const auto uniform = next_symbol_pmf({0, 0, 0});
  CHECK(uniform[0] == Rational(1, 3));
  CHECK(uniform[1] == Rational(1, 3));
  CHECK(uniform[2] == Rational(1, 3));

  const auto after_small = next_symbol_pmf({1, 0, 0});
  CHECK(after_small[0] == Rational(2, 4));
  CHECK(after_small[1] == Rational(1, 4));
  CHECK(after_small[2] == Rational(1, 4));

  for (const CountState& state :
       {CountState{3, 1, 2}, CountState{0, 7, 0}, CountState{5, 0, 5}}) {
    const auto pmf = next_symbol_pmf(state);
    CHECK(pmf[0] + pmf[1] + pmf[2] == Rational(1));
  }
}

TEST_CASE("minimum additional cost: pinned values") {
  CHECK(min_additional_cost(2) == Rational(0));
  CHECK(min_additional_cost(3) == Rational(1, 3));
  CHECK(min_additional_cost(4) == Rational(7, 12));
  CHECK_THROWS_AS(min_additional_cost(1), std::invalid_argument);
}

TEST_CASE("backward and forward formulations agree") {
  for (unsigned n = 2; n <= 60; ++n)
    CHECK(min_costs()[n] == min_additional_cost_forward(n));
  CHECK(min_costs()[150] == min_additional_cost_forward(150));
}

TEST_CASE("strategy evaluation: pinned values") {
  CHECK(strategy_additional_cost(kCount, 4) == Rational(7, 12));
  CHECK(strategy_additional_cost(kAlwaysP, 4) == Rational(2, 3));
}

TEST_CASE("always-p cost cross-checked by full sequence enumeration") {
  for (unsigned n = 2; n <= 7; ++n) {
    const unsigned length = n - 2;
    std::uint64_t sequences = 1;
    for (unsigned i = 0; i < length; ++i) sequences *= 3;
    Int numerator(0);
    for (std::uint64_t code = 0; code < sequences; ++code) {
      unsigned small = 0, medium = 0, large = 0, additional = 0;
      std::uint64_t rest = code;
      for (unsigned t = 0; t < length; ++t) {
        const unsigned sym = rest % 3;
        rest /= 3;
        if (sym == 2) ++additional;  // always compared with p first
        small += sym == 0;
        medium += sym == 1;
        large += sym == 2;
      }
      numerator += factorial(small) * factorial(medium) * factorial(large) *
                   Int(additional);
    }
    const Rational expected(numerator, binomial(n, 2) * factorial(length));
    CHECK(strategy_additional_cost(kAlwaysP, n) == expected);
  }
}

TEST_CASE("count attains the dynamic-programming minimum up to n = 200") {
  const AdditionalCostProfile profile(kCount, 198);
  for (unsigned n = 2; n <= 200; ++n)
    CHECK(min_costs()[n] == profile.cost_for(n));
  // The prefix-summed profile is the same forward DP as the one-shot call.
  for (unsigned n : {2u, 17u, 63u, 128u, 200u})
    CHECK(profile.cost_for(n) == strategy_additional_cost(kCount, n));
}

TEST_CASE("additional cost of count reconciles with the partitioning cost") {
  const AdditionalCostProfile profile(kCount, 198);
  for (unsigned n = 2; n <= 200; ++n) {
    const Rational necessary_and_pivot =
        Rational(1) + Rational(Int(n - 2)) + expected_medium(n);
    CHECK(profile.cost_for(n) == partition_cost_count(n) - necessary_and_pivot);
  }
}

TEST_CASE("oracle strategy beats every algorithmic strategy") {
  for (unsigned n = 2; n <= 200; ++n) {
    const Rational oracle_additional = partition_cost_clairvoyant(n) - Rational(1) -
                                       Rational(Int(n - 2)) - expected_medium(n);
    const Rational algorithmic_floor = min_costs()[n];
    CHECK(oracle_additional <= algorithmic_floor);
    if (n >= 4) CHECK(oracle_additional < algorithmic_floor);
  }
}

TEST_CASE("minimum additional cost is nondecreasing") {
  Rational previous(0);
  for (unsigned n = 2; n <= 200; ++n) {
    CHECK(previous <= min_costs()[n]);
    previous = min_costs()[n];
  }
}

TEST_CASE("table-driven strategies reject missing states") {
  StrategyTable empty;
  CHECK_THROWS_AS(strategy_additional_cost(empty, 4), std::invalid_argument);

  StrategyTable always_p;
  for (unsigned t = 0; t <= 2; ++t)
    for (unsigned s = 0; s <= t; ++s)
      for (unsigned l = 0; s + l <= t; ++l)
        always_p.decisions[{s, t - s - l, l}] = PivotFirst::p;
  CHECK(strategy_additional_cost(always_p, 4) == Rational(2, 3));
}

TEST_CASE("exhaustive strategy enumeration") {
  const EnumerationResult n2 = enumerate_strategies(2);
  CHECK(n2.minimum == Rational(0));
  CHECK(n2.count_attains);
  CHECK(n2.decision_points == 0);

  const EnumerationResult n3 = enumerate_strategies(3);
  CHECK(n3.minimum == Rational(1, 3));
  CHECK(n3.count_attains);
  CHECK(n3.decision_points == 1);
  CHECK(n3.strategies_evaluated == 2);

  const EnumerationResult n4 = enumerate_strategies(4);
  CHECK(n4.minimum == Rational(7, 12));
  CHECK(n4.count_attains);
  CHECK(n4.decision_points == 4);
  CHECK(n4.strategies_evaluated == 16);
  CHECK(n4.optima_match_count_off_ties);

  const EnumerationResult n5 = enumerate_strategies(5);
  CHECK(n5.minimum == min_additional_cost(5));
  CHECK(n5.count_attains);
  CHECK(n5.decision_points == 13);
  CHECK(n5.strategies_evaluated == 8192);
  CHECK(n5.optima_match_count_off_ties);
  // Decisions at tied prefixes are free; everything else is forced.
  CHECK(n5.optimal_strategies ==
        (std::uint64_t(1) << n5.tie_decision_points));

  CHECK_THROWS_AS(enumerate_strategies(6), std::invalid_argument);
}

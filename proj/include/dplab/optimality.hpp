#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <tuple>

#include "dplab/classify.hpp"
#include "dplab/rational.hpp"

namespace dplab {

/// Counts of classified symbols after t = small + medium + large rounds.
struct CountState {
  unsigned small = 0;
  unsigned medium = 0;
  unsigned large = 0;

  unsigned t() const { return small + medium + large; }
};

/// Law of the next symbol given the counts so far:
/// P{next = class c} = (count_c + 1) / (t + 3).
std::array<Rational, 3> next_symbol_pmf(const CountState& state);

/// A deterministic decision rule on count states.
using CountStrategy = std::function<PivotFirst(const CountState&)>;

/// Decision table over count states; must cover every reachable state up to
/// the horizon it is evaluated at.
struct StrategyTable {
  std::map<std::tuple<unsigned, unsigned, unsigned>, PivotFirst> decisions;
};

/// Minimum expected number of additional comparisons over all partitioning
/// strategies for inputs of n >= 2 elements. Backward dynamic program over
/// count states: terminal states at t = n-2 have value 0, interior states
/// take the cheaper pivot choice plus the expected value of the successor.
Rational min_additional_cost(unsigned n);

/// The same quantity accumulated forwards: sum over levels of state
/// probability times the per-state minimum risk. Must agree with
/// min_additional_cost; kept as an independent route.
Rational min_additional_cost_forward(unsigned n);

/// Expected number of additional comparisons of one fixed strategy,
/// by forward propagation of exact state probabilities.
Rational strategy_additional_cost(const CountStrategy& strategy, unsigned n);

/// Table-driven overload; throws if the table is missing a reachable state.
Rational strategy_additional_cost(const StrategyTable& strategy, unsigned n);

/// Per-level additional-cost contributions of a strategy, computed once up
/// to a horizon; cost_for(n) then serves every n with n-2 <= t_max by
/// prefix summation.
class AdditionalCostProfile {
 public:
  AdditionalCostProfile(const CountStrategy& strategy, unsigned t_max);

  Rational cost_for(unsigned n) const;
  unsigned t_max() const { return static_cast<unsigned>(prefix_.size()) - 2; }

 private:
  std::vector<Rational> prefix_;  // prefix_[t] = sum of contributions below level t
};

struct EnumerationResult {
  Rational minimum;
  bool count_attains = false;
  std::uint64_t strategies_evaluated = 0;
  std::uint64_t optimal_strategies = 0;
  unsigned decision_points = 0;
  unsigned tie_decision_points = 0;  // prefixes with equal small/large counts
  // Every optimal strategy picks Count's pivot wherever the counts differ.
  bool optima_match_count_off_ties = false;
};

/// Exhaustively evaluates every full-history strategy (one independent
/// decision per prefix over the three classes) by complete class-sequence
/// enumeration. Only feasible for n <= 5.
EnumerationResult enumerate_strategies(unsigned n);

}  // namespace dplab

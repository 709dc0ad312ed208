#include "dplab/optimality.hpp"

#include <algorithm>
#include <stdexcept>

#include "dplab/exact_math.hpp"

namespace dplab {

namespace {

void require_n_at_least_2(unsigned n, const char* who) {
  if (n < 2) throw std::invalid_argument(std::string(who) + ": n must be >= 2");
}

// Triangular indexing of the pairs (s, l) with s + l <= t.
inline std::size_t pair_index(unsigned s, unsigned l, unsigned t) {
  const std::size_t ss = s;
  return ss * (t + 2) - ss * (ss + 1) / 2 + l;
}

inline std::size_t level_size(unsigned t) {
  return static_cast<std::size_t>(t + 1) * (t + 2) / 2;
}

}  // namespace

std::array<Rational, 3> next_symbol_pmf(const CountState& state) {
  const Int den(state.t() + 3);
  return {Rational(Int(state.small + 1), den), Rational(Int(state.medium + 1), den),
          Rational(Int(state.large + 1), den)};
}

Rational min_additional_cost(unsigned n) {
  require_n_at_least_2(n, "min_additional_cost");
  const unsigned horizon = n - 2;  // number of classification rounds
  if (horizon == 0) return Rational(0);

  // Work with values scaled by K_t = (n+2)!/(t+2)!, which turns the DP into
  // pure integer arithmetic: W_t(s,l) = K_t * value_t(s,l) satisfies
  //   W_t(s,l) = min(s+1, l+1) * K_{t+1}
  //            + (s+1) W_{t+1}(s+1,l) + (l+1) W_{t+1}(s,l+1)
  //            + (t-s-l+1) W_{t+1}(s,l),
  // with W_{horizon} = 0 and the answer W_0(0,0) / K_0, K_0 = (n+2)!/2.
  std::vector<Int> next(level_size(horizon), Int(0));
  std::vector<Int> cur;
  Int k_next((n + 1) * static_cast<unsigned long>(n + 2));  // K_{horizon}

  for (unsigned t = horizon; t-- > 0;) {
    cur.assign(level_size(t), Int(0));
    for (unsigned s = 0; s <= t; ++s) {
      for (unsigned l = 0; l + s <= t; ++l) {
        Int& w = cur[pair_index(s, l, t)];
        w = Int(std::min(s, l) + 1) * k_next;
        mpz_addmul_ui(w.get_mpz_t(), next[pair_index(s + 1, l, t + 1)].get_mpz_t(),
                      s + 1);
        mpz_addmul_ui(w.get_mpz_t(), next[pair_index(s, l + 1, t + 1)].get_mpz_t(),
                      l + 1);
        mpz_addmul_ui(w.get_mpz_t(), next[pair_index(s, l, t + 1)].get_mpz_t(),
                      t - s - l + 1);
      }
    }
    if (t > 0) k_next *= Int(t + 3);  // K_t for the next (lower) level
    next.swap(cur);
  }
  const Int k0 = k_next * 3;  // K_0 = K_1 * 3
  return Rational(next[0], k0);
}

namespace {

// Forward propagation of scaled state weights. With P(state at level t)
// denoting the exact probability of the counts (s, m, l), the integers
// N = P * (t+2)!/2 satisfy N(child) = sum over parents of (count+1) * N.
// The level-t additional-cost contribution of a rule assigning each state a
// risk count r (the count of the symbol that would trigger an additional
// comparison) is (2 / (t+3)!) * sum over states of N * (r + 1).
Rational forward_additional_cost(
    const std::function<unsigned(const CountState&)>& risk_count, unsigned n) {
  require_n_at_least_2(n, "strategy_additional_cost");
  const unsigned horizon = n - 2;
  if (horizon == 0) return Rational(0);

  Rational cost(0);
  std::vector<Int> level{Int(1)};
  Int level_factorial(2);  // (t+2)! at t = 0
  for (unsigned t = 0; t < horizon; ++t) {
    Int risk_sum(0);
    for (unsigned s = 0; s <= t; ++s) {
      for (unsigned l = 0; l + s <= t; ++l) {
        const Int& weight = level[pair_index(s, l, t)];
        if (weight == 0) continue;
        const CountState state{s, t - s - l, l};
        mpz_addmul_ui(risk_sum.get_mpz_t(), weight.get_mpz_t(),
                      risk_count(state) + 1);
      }
    }
    level_factorial *= Int(t + 3);  // now (t+3)!
    cost += Rational(2 * risk_sum, level_factorial);

    if (t + 1 < horizon) {
      std::vector<Int> next(level_size(t + 1), Int(0));
      for (unsigned s = 0; s <= t; ++s) {
        for (unsigned l = 0; l + s <= t; ++l) {
          const Int& weight = level[pair_index(s, l, t)];
          if (weight == 0) continue;
          mpz_addmul_ui(next[pair_index(s + 1, l, t + 1)].get_mpz_t(),
                        weight.get_mpz_t(), s + 1);
          mpz_addmul_ui(next[pair_index(s, l + 1, t + 1)].get_mpz_t(),
                        weight.get_mpz_t(), l + 1);
          mpz_addmul_ui(next[pair_index(s, l, t + 1)].get_mpz_t(),
                        weight.get_mpz_t(), t - s - l + 1);
        }
      }
      level.swap(next);
    }
  }
  return cost;
}

}  // namespace

Rational min_additional_cost_forward(unsigned n) {
  return forward_additional_cost(
      [](const CountState& state) { return std::min(state.small, state.large); }, n);
}

Rational strategy_additional_cost(const CountStrategy& strategy, unsigned n) {
  return forward_additional_cost(
      [&strategy](const CountState& state) {
        return strategy(state) == PivotFirst::p ? state.large : state.small;
      },
      n);
}

Rational strategy_additional_cost(const StrategyTable& strategy, unsigned n) {
  return forward_additional_cost(
      [&strategy](const CountState& state) {
        const auto it = strategy.decisions.find(
            std::make_tuple(state.small, state.medium, state.large));
        if (it == strategy.decisions.end())
          throw std::invalid_argument(
              "strategy_additional_cost: strategy table is missing a reachable state");
        return it->second == PivotFirst::p ? state.large : state.small;
      },
      n);
}

AdditionalCostProfile::AdditionalCostProfile(const CountStrategy& strategy,
                                             unsigned t_max) {
  prefix_.assign(t_max + 1, Rational(0));
  Rational running(0);
  std::vector<Int> level{Int(1)};
  Int level_factorial(2);
  for (unsigned t = 0; t <= t_max; ++t) {
    prefix_[t] = running;
    Int risk_sum(0);
    std::vector<Int> next(level_size(t + 1), Int(0));
    for (unsigned s = 0; s <= t; ++s) {
      for (unsigned l = 0; l + s <= t; ++l) {
        const Int& weight = level[pair_index(s, l, t)];
        if (weight == 0) continue;
        const CountState state{s, t - s - l, l};
        const unsigned risk =
            strategy(state) == PivotFirst::p ? state.large : state.small;
        mpz_addmul_ui(risk_sum.get_mpz_t(), weight.get_mpz_t(), risk + 1);
        mpz_addmul_ui(next[pair_index(s + 1, l, t + 1)].get_mpz_t(),
                      weight.get_mpz_t(), s + 1);
        mpz_addmul_ui(next[pair_index(s, l + 1, t + 1)].get_mpz_t(),
                      weight.get_mpz_t(), l + 1);
        mpz_addmul_ui(next[pair_index(s, l, t + 1)].get_mpz_t(), weight.get_mpz_t(),
                      t - s - l + 1);
      }
    }
    level_factorial *= Int(t + 3);
    running += Rational(2 * risk_sum, level_factorial);
    level.swap(next);
  }
  prefix_.push_back(running);
}

Rational AdditionalCostProfile::cost_for(unsigned n) const {
  require_n_at_least_2(n, "AdditionalCostProfile::cost_for");
  const unsigned horizon = n - 2;
  if (horizon >= prefix_.size())
    throw std::invalid_argument("AdditionalCostProfile: horizon beyond t_max");
  return prefix_[horizon];
}

EnumerationResult enumerate_strategies(unsigned n) {
  require_n_at_least_2(n, "enumerate_strategies");
  if (n > 5) throw std::invalid_argument("enumerate_strategies: n must be <= 5");

  const unsigned length = n - 2;
  EnumerationResult result;

  // Index every prefix of length < length; decisions at these points fully
  // describe a strategy.
  std::map<std::vector<std::uint8_t>, unsigned> prefix_index;
  std::vector<ClassCounts> prefix_counts;
  {
    std::vector<std::vector<std::uint8_t>> frontier{{}};
    for (unsigned len = 0; len < length; ++len) {
      std::vector<std::vector<std::uint8_t>> next_frontier;
      for (auto& prefix : frontier) {
        const unsigned id = static_cast<unsigned>(prefix_index.size());
        prefix_index.emplace(prefix, id);
        ClassCounts counts;
        for (auto sym : prefix) counts.add(static_cast<ClassSymbol>(sym));
        prefix_counts.push_back(counts);
        for (std::uint8_t sym = 0; sym < 3; ++sym) {
          auto extended = prefix;
          extended.push_back(sym);
          next_frontier.push_back(std::move(extended));
        }
      }
      frontier = std::move(next_frontier);
    }
  }
  const unsigned points = static_cast<unsigned>(prefix_index.size());
  result.decision_points = points;
  for (const auto& counts : prefix_counts)
    if (counts.small == counts.large) ++result.tie_decision_points;

  // Every class sequence with its weight numerator over the common
  // denominator C(n,2) * (n-2)!: P{sequence} = s! m! l! / that denominator.
  struct SequenceTrace {
    std::uint64_t weight;
    std::vector<std::pair<unsigned, std::uint8_t>> steps;  // (prefix id, symbol)
  };
  std::vector<SequenceTrace> sequences;
  const std::uint64_t total_sequences = [&] {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < length; ++i) v *= 3;
    return v;
  }();
  for (std::uint64_t code = 0; code < total_sequences; ++code) {
    SequenceTrace trace;
    std::vector<std::uint8_t> prefix;
    ClassCounts counts;
    std::uint64_t rest = code;
    for (unsigned t = 0; t < length; ++t) {
      const std::uint8_t sym = static_cast<std::uint8_t>(rest % 3);
      rest /= 3;
      trace.steps.emplace_back(prefix_index.at(prefix), sym);
      prefix.push_back(sym);
      counts.add(static_cast<ClassSymbol>(sym));
    }
    auto fact = [](unsigned v) {
      std::uint64_t f = 1;
      for (unsigned i = 2; i <= v; ++i) f *= i;
      return f;
    };
    trace.weight = fact(counts.small) * fact(counts.medium) * fact(counts.large);
    sequences.push_back(std::move(trace));
  }
  const Int denominator = binomial(n, 2) * factorial(length);

  // Count's own decision at every point, encoded as the bit q-first = 1.
  std::uint64_t count_mask = 0;
  for (unsigned id = 0; id < points; ++id)
    if (prefix_counts[id].small < prefix_counts[id].large)
      count_mask |= std::uint64_t(1) << id;

  const std::uint64_t masks = std::uint64_t(1) << points;
  std::uint64_t best = UINT64_MAX;
  std::vector<std::uint64_t> argmin;
  std::uint64_t count_cost = 0;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    std::uint64_t cost = 0;
    for (const auto& seq : sequences) {
      unsigned additional = 0;
      for (const auto& [id, sym] : seq.steps) {
        const bool q_first = (mask >> id) & 1;
        if (q_first ? sym == static_cast<std::uint8_t>(ClassSymbol::small)
                    : sym == static_cast<std::uint8_t>(ClassSymbol::large))
          ++additional;
      }
      cost += seq.weight * additional;
    }
    if (mask == count_mask) count_cost = cost;
    if (cost < best) {
      best = cost;
      argmin.clear();
    }
    if (cost == best) argmin.push_back(mask);
  }

  result.strategies_evaluated = masks;
  result.minimum = Rational(Int(best), denominator);
  result.count_attains = count_cost == best;
  result.optimal_strategies = argmin.size();
  result.optima_match_count_off_ties = true;
  for (const std::uint64_t mask : argmin) {
    for (unsigned id = 0; id < points; ++id) {
      if (prefix_counts[id].small == prefix_counts[id].large) continue;
      if (((mask >> id) & 1) != ((count_mask >> id) & 1))
        result.optima_match_count_off_ties = false;
    }
  }
  return result;
}

}  // namespace dplab

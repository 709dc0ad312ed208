#include "dplab/lattice_paths.hpp"

#include <stdexcept>

namespace dplab {

PathStats path_stats(const LatticePath& path) {
  PathStats stats;
  long height = 0;
  const std::size_t n = path.steps.size();
  for (std::size_t t = 0; t <= n; ++t) {
    if (height == 0) {
      ++stats.zeros;
      if (t < n && path.steps[t] > 0) ++stats.up_from_zero;
    }
    if (t < n) height += path.steps[t];
  }
  return stats;
}

LatticePath sample_path(unsigned n, SplitMix64& rng) {
  const unsigned downs = static_cast<unsigned>(rng.below(n + 1));
  LatticePath path;
  path.steps.assign(n, +1);
  for (unsigned i = 0; i < downs; ++i) path.steps[i] = -1;
  shuffle(path.steps, rng);
  return path;
}

Rational urn_transition_probability(const UrnState& state, unsigned color) {
  if (color >= state.counts.size())
    throw std::invalid_argument("urn_transition_probability: bad color");
  const unsigned h = static_cast<unsigned>(state.counts.size());
  return Rational(Int(state.counts[color] + 1), Int(state.t() + h));
}

std::vector<UrnState> sample_path_urn(unsigned h, unsigned n, SplitMix64& rng) {
  if (h < 1) throw std::invalid_argument("sample_path_urn: h must be >= 1");
  std::vector<UrnState> trajectory;
  trajectory.reserve(n + 1);
  UrnState state{std::vector<unsigned>(h, 0)};
  trajectory.push_back(state);
  for (unsigned t = 0; t < n; ++t) {
    std::uint64_t u = rng.below(t + h);
    unsigned color = 0;
    while (u >= state.counts[color] + 1ULL) {
      u -= state.counts[color] + 1ULL;
      ++color;
    }
    ++state.counts[color];
    trajectory.push_back(state);
  }
  return trajectory;
}

std::map<std::vector<unsigned>, Rational> urn_endpoint_distribution(unsigned h, unsigned n) {
  if (h < 1) throw std::invalid_argument("urn_endpoint_distribution: h must be >= 1");
  std::map<std::vector<unsigned>, Rational> level;
  level[std::vector<unsigned>(h, 0)] = Rational(1);
  for (unsigned t = 0; t < n; ++t) {
    std::map<std::vector<unsigned>, Rational> next;
    for (const auto& [counts, prob] : level) {
      for (unsigned j = 0; j < h; ++j) {
        auto child = counts;
        ++child[j];
        next[child] += prob * Rational(Int(counts[j] + 1), Int(t + h));
      }
    }
    level = std::move(next);
  }
  return level;
}

Rational urn_path_probability(unsigned h, const std::vector<unsigned>& colors) {
  std::vector<unsigned> counts(h, 0);
  Rational prob(1);
  for (std::size_t t = 0; t < colors.size(); ++t) {
    const unsigned j = colors[t];
    if (j >= h) throw std::invalid_argument("urn_path_probability: bad color");
    prob *= Rational(Int(counts[j] + 1), Int(t + h));
    ++counts[j];
  }
  return prob;
}

Rational expected_zeros_double_sum(unsigned n) {
  const auto row = binomial_row(n);
  Rational sum(0);
  Int prefix(0);  // sum of C(n, k) for k < l
  for (unsigned l = 0; l < (n + 1) / 2; ++l) {
    if (l > 0) {
      prefix += row[l - 1];
      sum += Rational(prefix, row[l]);
    }
  }
  Rational result = Rational(4, static_cast<long>(n) + 1) * sum + Rational(1);
  if (n % 2 == 0) {
    result += Rational(Int(1), Int(n + 1)) * (Rational(pow2(n), row[n / 2]) - Rational(1));
  }
  return result;
}

Rational expected_zeros_closed(unsigned n) { return harmonic(HarmonicKind::odd, n + 1); }

Rational expected_up_from_zero(unsigned n) {
  return harmonic(HarmonicKind::odd, n) / Rational(2);
}

Rational point_probability(unsigned n, unsigned t, long k) {
  if (t > n) throw std::invalid_argument("point_probability: t must be <= n");
  const long tt = static_cast<long>(t);
  if (k < -tt || k > tt || ((k % 2 + 2) % 2) != (tt % 2)) return Rational(0);
  return Rational(Int(1), Int(t + 1));
}

Rational conditional_expected_zeros(unsigned n, long d) {
  const long nn = static_cast<long>(n);
  const long ad = d < 0 ? -d : d;
  if (ad > nn || (nn - ad) % 2 != 0)
    throw std::invalid_argument("conditional_expected_zeros: infeasible endpoint");
  const unsigned l = static_cast<unsigned>((nn - ad) / 2);
  if (l == 0) return Rational(0);
  const auto row = binomial_row(n);
  Int prefix(0);
  for (unsigned k = 0; k < l; ++k) prefix += row[k];
  return Rational(2 * prefix, row[l]);
}

Rational zeros_distribution(unsigned n, unsigned r) {
  if (r < 1) throw std::invalid_argument("zeros_distribution: r must be >= 1");
  if (n == 0) return r == 1 ? Rational(1) : Rational(0);
  if (n + 2 < 2 * r) return Rational(0);

  const unsigned half_up = (n + 1) / 2;  // ceil(n/2)
  const Int c_n_r = binomial(n, static_cast<long>(r));
  const unsigned long rl = r;

  Rational bracket = Rational(Int(2 * half_up), Int(rl * (rl + 1))) +
                     Rational(Int(rl - 1), Int(rl + 1));
  if (n % 2 == 0) bracket += Rational(Int(1), Int(rl));

  Rational result = Rational(pow2(r), Int(n + 1)) *
                    Rational(binomial(half_up, static_cast<long>(r)), c_n_r) * bracket;
  if (n % 2 == 0) {
    result += Rational(pow2(r - 1) * Int(rl - 1), Int(n + 1) * Int(rl)) *
              Rational(binomial(n / 2, static_cast<long>(r) - 1), c_n_r);
  }
  return result;
}

namespace {

// Second double-sum form, written over the odd row 2*floor(n/2)+1.
Rational identity_double_simple(unsigned n) {
  const unsigned half = n / 2;
  const unsigned long odd_n = 2UL * half + 1;
  const auto row = binomial_row(odd_n);
  Rational sum(0);
  Int prefix(0);
  for (unsigned l = 0; l <= half; ++l) {
    if (l > 0) {
      prefix += row[l - 1];
      sum += Rational(prefix, row[l]);
    }
  }
  return Rational(2, static_cast<long>(half) + 1) * sum + Rational(1);
}

// Form obtained from splitting a path at its last visit to the axis.
Rational identity_first_passage(unsigned n) {
  const auto row_n = binomial_row(n);
  Rational sum(0);
  for (unsigned m = 0; 2 * m <= n; ++m) {
    const Int central = binomial(2UL * m, static_cast<long>(m));
    const auto row_rest = binomial_row(n - 2UL * m);
    for (unsigned l = m; l + m <= n; ++l) {
      sum += Rational(central * row_rest[l - m], row_n[l]);
    }
  }
  return sum / Rational(static_cast<long>(n) + 1);
}

}  // namespace

std::array<Rational, 4> identity_quadruple(unsigned n) {
  return {expected_zeros_double_sum(n), identity_double_simple(n),
          identity_first_passage(n), harmonic(HarmonicKind::odd, n + 1)};
}

ExhaustiveStats enumerate_paths(unsigned n) {
  if (n > 20) throw std::invalid_argument("enumerate_paths: n too large for enumeration");
  const auto row = binomial_row(n);

  ExhaustiveStats stats;
  stats.expected_zeros = Rational(0);
  stats.expected_up_from_zero = Rational(0);
  stats.zero_count_pmf.assign(n / 2 + 2, Rational(0));
  stats.point_hit.assign(n + 1, {});
  for (unsigned t = 0; t <= n; ++t) stats.point_hit[t].assign(t + 1, Rational(0));

  LatticePath path;
  path.steps.assign(n, 0);
  const std::uint64_t words = std::uint64_t(1) << n;
  for (std::uint64_t word = 0; word < words; ++word) {
    unsigned downs = 0;
    for (unsigned t = 0; t < n; ++t) {
      const bool down = (word >> t) & 1;
      path.steps[t] = down ? -1 : +1;
      downs += down;
    }
    const Rational weight(Int(1), Int(n + 1) * row[downs]);
    const PathStats ps = path_stats(path);
    stats.expected_zeros += weight * Rational(Int(ps.zeros));
    stats.expected_up_from_zero += weight * Rational(Int(ps.up_from_zero));
    stats.zero_count_pmf[ps.zeros] += weight;

    long height = 0;
    for (unsigned t = 0; t <= n; ++t) {
      stats.point_hit[t][static_cast<unsigned>((height + t) / 2)] += weight;
      if (t < n) height += path.steps[t];
    }
  }
  return stats;
}

}  // namespace dplab

#include "dplab/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "dplab/analysis.hpp"
#include "dplab/lattice_paths.hpp"
#include "dplab/rng.hpp"
#include "dplab/sort.hpp"

namespace dplab {

namespace {

struct MomentSums {
  // Totals are exact integers; order of aggregation cannot change them.
  Int sum;
  Int sum_sq;

  void add(std::uint64_t x) {
    sum += Int(x);
    sum_sq += Int(x) * Int(x);
  }
  MomentSums& operator+=(const MomentSums& o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
    return *this;
  }
};

struct SampleSums {
  MomentSums primary;
  MomentSums secondary;
  std::vector<std::uint64_t> histogram;

  SampleSums& operator+=(const SampleSums& o) {
    primary += o.primary;
    secondary += o.secondary;
    if (histogram.size() < o.histogram.size()) histogram.resize(o.histogram.size(), 0);
    for (std::size_t i = 0; i < o.histogram.size(); ++i) histogram[i] += o.histogram[i];
    return *this;
  }
};

SampleSums run_shard(SimTarget target, unsigned n, std::uint64_t seed,
                     std::uint64_t begin, std::uint64_t end) {
  SampleSums sums;
  if (target == SimTarget::path_distribution) sums.histogram.assign(n / 2 + 2, 0);
  std::vector<int> values;
  for (std::uint64_t i = begin; i < end; ++i) {
    SplitMix64 rng(derive_seed(seed, i));
    switch (target) {
      case SimTarget::path_zeros: {
        const LatticePath path = sample_path(n, rng);
        const PathStats stats = path_stats(path);
        sums.primary.add(stats.zeros);
        sums.secondary.add(stats.up_from_zero);
        break;
      }
      case SimTarget::path_distribution: {
        const LatticePath path = sample_path(n, rng);
        const PathStats stats = path_stats(path);
        sums.primary.add(stats.zeros);
        ++sums.histogram[stats.zeros];
        break;
      }
      case SimTarget::sort_count:
      case SimTarget::sort_clairvoyant: {
        values.resize(n);
        for (unsigned v = 0; v < n; ++v) values[v] = static_cast<int>(v);
        shuffle(values, rng);
        const ComparisonTally tally = target == SimTarget::sort_count
                                          ? sort_count(values)
                                          : sort_clairvoyant(values);
        sums.primary.add(tally.total);
        break;
      }
    }
  }
  return sums;
}

double mean_of(const MomentSums& m, std::uint64_t samples) {
  return Rational(m.sum, Int(samples)).to_double();
}

double std_error_of(const MomentSums& m, std::uint64_t samples) {
  if (samples < 2) return 0.0;
  const double mean = mean_of(m, samples);
  const double mean_sq = Rational(m.sum_sq, Int(samples)).to_double();
  const double variance =
      (mean_sq - mean * mean) * (static_cast<double>(samples) / (samples - 1.0));
  return std::sqrt(variance > 0 ? variance / static_cast<double>(samples) : 0.0);
}

ReportRow mean_row(std::string quantity, unsigned n, const Rational& exact,
                   const MomentSums& m, std::uint64_t samples, std::uint64_t seed) {
  ReportRow row;
  row.n = n;
  row.quantity = std::move(quantity);
  row.exact = exact;
  row.decimal = exact.to_double();
  row.empirical = mean_of(m, samples);
  row.std_error = std_error_of(m, samples);
  row.samples = samples;
  row.seed = seed;
  return row;
}

}  // namespace

std::vector<ReportRow> run_simulation(SimTarget target, unsigned n,
                                      std::uint64_t samples, std::uint64_t seed,
                                      unsigned threads) {
  if (samples < 1) throw std::invalid_argument("run_simulation: samples must be >= 1");
  if (threads == 0) threads = 1;
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, samples));

  std::vector<SampleSums> shard_sums(threads);
  if (threads == 1) {
    shard_sums[0] = run_shard(target, n, seed, 0, samples);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t begin = samples * w / threads;
      const std::uint64_t end = samples * (w + 1) / threads;
      pool.emplace_back([&, w, begin, end] {
        shard_sums[w] = run_shard(target, n, seed, begin, end);
      });
    }
    for (auto& t : pool) t.join();
  }
  SampleSums sums;
  if (target == SimTarget::path_distribution) sums.histogram.assign(n / 2 + 2, 0);
  for (const auto& s : shard_sums) sums += s;

  std::vector<ReportRow> rows;
  switch (target) {
    case SimTarget::path_zeros:
      rows.push_back(mean_row("path_zeros_mean", n, expected_zeros_closed(n),
                              sums.primary, samples, seed));
      rows.push_back(mean_row("path_up_from_zero_mean", n, expected_up_from_zero(n),
                              sums.secondary, samples, seed));
      break;
    case SimTarget::path_distribution: {
      rows.push_back(mean_row("path_zeros_mean", n, expected_zeros_closed(n),
                              sums.primary, samples, seed));
      const unsigned r_max = std::min<unsigned>(10, n / 2 + 1);
      for (unsigned r = 1; r <= r_max; ++r) {
        ReportRow row;
        row.n = n;
        row.quantity = "path_zeros_pmf_r" + std::to_string(r);
        row.exact = zeros_distribution(n, r);
        row.decimal = row.exact->to_double();
        const double freq =
            static_cast<double>(sums.histogram[r]) / static_cast<double>(samples);
        row.empirical = freq;
        row.std_error = std::sqrt(
            std::max(0.0, freq * (1.0 - freq) / static_cast<double>(samples)));
        row.samples = samples;
        row.seed = seed;
        rows.push_back(std::move(row));
      }
      break;
    }
    case SimTarget::sort_count:
      rows.push_back(mean_row("sort_count_mean", n, total_cost_count_closed(n),
                              sums.primary, samples, seed));
      break;
    case SimTarget::sort_clairvoyant:
      rows.push_back(mean_row("sort_clairvoyant_mean", n,
                              total_cost_clairvoyant_closed(n), sums.primary, samples,
                              seed));
      break;
  }
  return rows;
}

}  // namespace dplab

#include "dplab/sort.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace dplab {

std::vector<int> nth_permutation(unsigned n, std::uint64_t index) {
  std::vector<std::uint64_t> fact(n, 1);
  for (unsigned i = 1; i < n; ++i) fact[i] = fact[i - 1] * i;
  std::vector<int> pool(n);
  for (unsigned i = 0; i < n; ++i) pool[i] = static_cast<int>(i + 1);
  std::vector<int> result;
  result.reserve(n);
  for (unsigned i = n; i > 0; --i) {
    const std::uint64_t f = fact[i - 1];
    const std::size_t pick = static_cast<std::size_t>(index / f);
    index %= f;
    result.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return result;
}

SweepResult permutation_sweep(unsigned n, SortAlgo algo, unsigned threads) {
  if (n > 12) throw std::invalid_argument("permutation_sweep: n must be <= 12");
  std::uint64_t total_perms = 1;
  for (unsigned i = 2; i <= n; ++i) total_perms *= i;

  if (threads == 0) threads = 1;
  threads = std::min<std::uint64_t>(threads, total_perms);

  std::vector<Int> partial(threads, Int(0));
  auto worker = [&](unsigned w) {
    const std::uint64_t begin = total_perms * w / threads;
    const std::uint64_t end = total_perms * (w + 1) / threads;
    if (begin >= end) return;
    std::vector<int> perm = nth_permutation(n, begin);
    std::uint64_t comparisons = 0;
    std::vector<int> scratch;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      scratch = perm;
      ComparisonTally tally;
      switch (algo) {
        case SortAlgo::count: tally = sort_count(scratch); break;
        case SortAlgo::clairvoyant: tally = sort_clairvoyant(scratch); break;
        case SortAlgo::classic: tally = sort_classic(scratch); break;
      }
      if (!std::is_sorted(scratch.begin(), scratch.end()))
        throw std::logic_error("permutation_sweep: sort produced unsorted output");
      comparisons += tally.total;
      std::next_permutation(perm.begin(), perm.end());
    }
    partial[w] = Int(comparisons);
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }

  SweepResult result;
  result.permutations = total_perms;
  result.total_comparisons = Int(0);
  for (const Int& p : partial) result.total_comparisons += p;
  result.average = Rational(result.total_comparisons, Int(total_perms));
  return result;
}

}  // namespace dplab

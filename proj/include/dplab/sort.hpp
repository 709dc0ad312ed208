#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "dplab/classify.hpp"
#include "dplab/rational.hpp"

namespace dplab {

namespace detail {

// Counts every comparison it evaluates. All tallied element-element
// comparisons go through one of these.
template <typename Compare>
struct TallyingLess {
  Compare cmp;
  std::uint64_t* counter;

  template <typename T>
  bool operator()(const T& a, const T& b) {
    ++*counter;
    return cmp(a, b);
  }
};

// Dual-pivot partitioning loop shared by the counting and oracle variants.
// `d` starts at `d0` and moves by `d_small` / `d_large` when a small or
// large element is classified; the branch on d >= 0 selects which pivot the
// next element meets first. Elements equal to a pivot classify as medium.
template <typename T, typename Less>
std::pair<std::int64_t, std::int64_t> dual_pivot_partition(
    std::vector<T>& a, std::int64_t left, std::int64_t right, std::int64_t d0,
    int d_small, int d_large, Less& less, ComparisonTally& tally) {
  const T p = a[left];
  const T q = a[right];
  std::int64_t i = left + 1;
  std::int64_t k = right - 1;
  std::int64_t j = i;
  std::int64_t d = d0;
  while (j <= k) {
    if (d >= 0) {
      if (less(a[j], p)) {  // small
        ++tally.necessary;
        std::swap(a[i], a[j]);
        ++i;
        ++j;
        d += d_small;
      } else if (less(q, a[j])) {  // large, reached through the wrong pivot
        ++tally.necessary;
        ++tally.additional;
        std::swap(a[j], a[k]);
        --k;
        d += d_large;
      } else {  // medium
        tally.necessary += 2;
        ++j;
      }
    } else {
      if (less(q, a[k])) {  // large
        ++tally.necessary;
        --k;
        d += d_large;
      } else {
        if (less(a[k], p)) {  // small, reached through the wrong pivot
          ++tally.necessary;
          ++tally.additional;
          // rotate3: cyclic left rotation of (a[k], a[j], a[i]); written as
          // two swaps so aliased indices (i == j or j == k) stay well-defined
          std::swap(a[k], a[j]);
          std::swap(a[j], a[i]);
          ++i;
          d += d_small;
        } else {  // medium
          tally.necessary += 2;
          std::swap(a[j], a[k]);
        }
        ++j;
      }
    }
  }
  std::swap(a[left], a[i - 1]);
  std::swap(a[right], a[k + 1]);
  return {i, k};
}

template <typename T, typename Less>
void count_sort_rec(std::vector<T>& a, std::int64_t left, std::int64_t right,
                    Less& less, ComparisonTally& tally) {
  if (right <= left) return;
  ++tally.pivot_pivot;
  if (less(a[right], a[left])) std::swap(a[left], a[right]);
  const auto [i, k] = dual_pivot_partition(a, left, right, /*d0=*/0,
                                           /*d_small=*/+1, /*d_large=*/-1, less, tally);
  count_sort_rec(a, left, i - 2, less, tally);
  count_sort_rec(a, i, k, less, tally);
  count_sort_rec(a, k + 2, right, less, tally);
}

template <typename T, typename Less, typename RawLess>
void clairvoyant_sort_rec(std::vector<T>& a, std::int64_t left, std::int64_t right,
                          Less& less, RawLess& raw_less, ComparisonTally& tally) {
  if (right <= left) return;
  ++tally.pivot_pivot;
  if (less(a[right], a[left])) std::swap(a[left], a[right]);
  // Oracle pass: d = #small - #large on this subarray, not tallied.
  std::int64_t d = 0;
  for (std::int64_t t = left + 1; t <= right - 1; ++t) {
    if (raw_less(a[t], a[left])) ++d;
    else if (raw_less(a[right], a[t])) --d;
  }
  const auto [i, k] = dual_pivot_partition(a, left, right, d,
                                           /*d_small=*/-1, /*d_large=*/+1, less, tally);
  clairvoyant_sort_rec(a, left, i - 2, less, raw_less, tally);
  clairvoyant_sort_rec(a, i, k, less, raw_less, tally);
  clairvoyant_sort_rec(a, k + 2, right, less, raw_less, tally);
}

template <typename T, typename Less>
void classic_sort_rec(std::vector<T>& a, std::int64_t left, std::int64_t right,
                      Less& less, ComparisonTally& tally) {
  if (right <= left) return;
  const T pivot = a[left];
  // Stable partition around the first element; n-1 comparisons, all necessary.
  std::vector<T> lower, upper;
  for (std::int64_t t = left + 1; t <= right; ++t) {
    ++tally.necessary;
    if (less(a[t], pivot)) lower.push_back(std::move(a[t]));
    else upper.push_back(std::move(a[t]));
  }
  std::int64_t pos = left;
  for (auto& v : lower) a[pos++] = std::move(v);
  const std::int64_t pivot_pos = pos;
  a[pos++] = pivot;
  for (auto& v : upper) a[pos++] = std::move(v);
  classic_sort_rec(a, left, pivot_pos - 1, less, tally);
  classic_sort_rec(a, pivot_pos + 1, right, less, tally);
}

}  // namespace detail

/// Dual-pivot quicksort steered by strategy "Count": the running difference
/// d = #small - #large seen so far decides which pivot is consulted first.
/// Sorts in place and returns the comparison tally.
template <typename T, typename Compare = std::less<T>>
ComparisonTally sort_count(std::vector<T>& values, Compare cmp = {}) {
  ComparisonTally tally;
  detail::TallyingLess<Compare> less{cmp, &tally.total};
  if (!values.empty())
    detail::count_sort_rec(values, 0, static_cast<std::int64_t>(values.size()) - 1,
                           less, tally);
  return tally;
}

/// Dual-pivot quicksort steered by the oracle strategy: d is initialized to
/// the subarray's total #small - #large (computed by an untallied pre-pass)
/// and counts down the remaining elements.
template <typename T, typename Compare = std::less<T>>
ComparisonTally sort_clairvoyant(std::vector<T>& values, Compare cmp = {}) {
  ComparisonTally tally;
  detail::TallyingLess<Compare> less{cmp, &tally.total};
  Compare raw = cmp;
  if (!values.empty())
    detail::clairvoyant_sort_rec(values, 0,
                                 static_cast<std::int64_t>(values.size()) - 1, less,
                                 raw, tally);
  return tally;
}

/// Classical single-pivot quicksort with the first element as pivot;
/// exactly n-1 comparisons per partitioning step.
template <typename T, typename Compare = std::less<T>>
ComparisonTally sort_classic(std::vector<T>& values, Compare cmp = {}) {
  ComparisonTally tally;
  detail::TallyingLess<Compare> less{cmp, &tally.total};
  if (!values.empty())
    detail::classic_sort_rec(values, 0, static_cast<std::int64_t>(values.size()) - 1,
                             less, tally);
  return tally;
}

enum class SortAlgo { count, clairvoyant, classic };

struct SweepResult {
  Rational average;        // total comparisons / n!
  Int total_comparisons;
  std::uint64_t permutations = 0;
};

/// Runs the chosen sort over all n! permutations of {1..n} and averages the
/// total comparison count, exactly. Sharded across `threads` workers.
/// Practical up to n = 12; the verification sweeps use n <= 8.
SweepResult permutation_sweep(unsigned n, SortAlgo algo, unsigned threads = 1);

/// The index-th permutation of {1..n} in lexicographic order.
std::vector<int> nth_permutation(unsigned n, std::uint64_t index);

}  // namespace dplab

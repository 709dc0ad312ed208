#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dplab/lattice_paths.hpp"

namespace dplab {

/// Classification of a non-pivot element against the pivot pair (p, q).
enum class ClassSymbol : std::uint8_t { small, medium, large };

using ClassSequence = std::vector<ClassSymbol>;

/// Which pivot the next element is compared with first.
enum class PivotFirst : std::uint8_t { p, q };

struct ClassCounts {
  unsigned small = 0;
  unsigned medium = 0;
  unsigned large = 0;

  unsigned total() const { return small + medium + large; }
  void add(ClassSymbol s) {
    if (s == ClassSymbol::small) ++small;
    else if (s == ClassSymbol::medium) ++medium;
    else ++large;
  }
};

ClassCounts tally_counts(std::span<const ClassSymbol> symbols);

/// Strategy "Count": compare with p first iff at least as many small as
/// large elements have been seen so far.
PivotFirst count_strategy(const ClassCounts& seen);

/// Oracle strategy: compare with p first iff at least as many small as
/// large elements remain. Rejects prefixes exceeding the totals.
PivotFirst clairvoyant_strategy(const ClassCounts& totals, const ClassCounts& seen);

/// A decision rule fed with the observed prefix and its class counts.
using Strategy =
    std::function<PivotFirst(std::span<const ClassSymbol> prefix, const ClassCounts& seen)>;

Strategy make_count_strategy();
Strategy make_clairvoyant_strategy(ClassCounts totals);

/// Comparison counts split by kind. `total` is incremented independently
/// by the comparator instrumentation, so total == pivot_pivot + necessary
/// + additional is a checkable invariant rather than a definition.
struct ComparisonTally {
  std::uint64_t pivot_pivot = 0;
  std::uint64_t necessary = 0;
  std::uint64_t additional = 0;
  std::uint64_t total = 0;

  ComparisonTally& operator+=(const ComparisonTally& o) {
    pivot_pivot += o.pivot_pivot;
    necessary += o.necessary;
    additional += o.additional;
    total += o.total;
    return *this;
  }
};

/// Runs a strategy over one class sequence and tallies the classification
/// comparisons: one per element, a second one for each medium element, and
/// one additional comparison whenever the wrong pivot was consulted first
/// (small element sent to q first, or large element sent to p first).
/// The pivot-pivot comparison is not part of this layer.
ComparisonTally classify_sequence(const Strategy& strategy, const ClassSequence& seq);

/// Translates a class sequence into the walk W (large -> +1, medium -> 0,
/// small -> -1) and the walk W' with the 0-steps removed.
struct SequenceWalks {
  std::vector<std::int8_t> with_medium;  // W
  LatticePath skeleton;                  // W'
};

SequenceWalks sequence_to_paths(const ClassSequence& seq);

}  // namespace dplab

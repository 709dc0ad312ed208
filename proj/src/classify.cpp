#include "dplab/classify.hpp"

#include <stdexcept>

namespace dplab {

ClassCounts tally_counts(std::span<const ClassSymbol> symbols) {
  ClassCounts counts;
  for (ClassSymbol s : symbols) counts.add(s);
  return counts;
}

PivotFirst count_strategy(const ClassCounts& seen) {
  return seen.small >= seen.large ? PivotFirst::p : PivotFirst::q;
}

PivotFirst clairvoyant_strategy(const ClassCounts& totals, const ClassCounts& seen) {
  if (seen.small > totals.small || seen.medium > totals.medium || seen.large > totals.large)
    throw std::invalid_argument("clairvoyant_strategy: prefix exceeds totals");
  return totals.small - seen.small >= totals.large - seen.large ? PivotFirst::p
                                                                : PivotFirst::q;
}

Strategy make_count_strategy() {
  return [](std::span<const ClassSymbol>, const ClassCounts& seen) {
    return count_strategy(seen);
  };
}

Strategy make_clairvoyant_strategy(ClassCounts totals) {
  return [totals](std::span<const ClassSymbol>, const ClassCounts& seen) {
    return clairvoyant_strategy(totals, seen);
  };
}

ComparisonTally classify_sequence(const Strategy& strategy, const ClassSequence& seq) {
  ComparisonTally tally;
  ClassCounts seen;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    const PivotFirst first =
        strategy(std::span<const ClassSymbol>(seq.data(), t), seen);
    const ClassSymbol sym = seq[t];
    switch (sym) {
      case ClassSymbol::small:
        ++tally.total;
        ++tally.necessary;
        if (first == PivotFirst::q) {
          ++tally.total;
          ++tally.additional;
        }
        break;
      case ClassSymbol::medium:
        tally.total += 2;
        tally.necessary += 2;
        break;
      case ClassSymbol::large:
        ++tally.total;
        ++tally.necessary;
        if (first == PivotFirst::p) {
          ++tally.total;
          ++tally.additional;
        }
        break;
    }
    seen.add(sym);
  }
  return tally;
}

SequenceWalks sequence_to_paths(const ClassSequence& seq) {
  SequenceWalks walks;
  walks.with_medium.reserve(seq.size());
  for (ClassSymbol s : seq) {
    switch (s) {
      case ClassSymbol::large:
        walks.with_medium.push_back(+1);
        walks.skeleton.steps.push_back(+1);
        break;
      case ClassSymbol::medium:
        walks.with_medium.push_back(0);
        break;
      case ClassSymbol::small:
        walks.with_medium.push_back(-1);
        walks.skeleton.steps.push_back(-1);
        break;
    }
  }
  return walks;
}

}  // namespace dplab

#pragma once

#include <cstdint>
#include <vector>

#include "dplab/report.hpp"

namespace dplab {

enum class SimTarget { sort_count, sort_clairvoyant, path_zeros, path_distribution };

/// Runs a seeded Monte Carlo experiment and reports empirical means with
/// standard errors next to the exact reference values. Each sample owns an
/// independent stream derived from (seed, sample index), and aggregation
/// uses integer totals, so the report is byte-identical for any thread
/// count and across platforms.
std::vector<ReportRow> run_simulation(SimTarget target, unsigned n,
                                      std::uint64_t samples, std::uint64_t seed,
                                      unsigned threads);

}  // namespace dplab

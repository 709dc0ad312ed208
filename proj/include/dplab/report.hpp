#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dplab/rational.hpp"

namespace dplab {

/// One record of a machine-readable report. Analytic quantities carry the
/// exact value as a reduced fraction; simulation rows add the empirical
/// mean, its standard error, and the sample/seed bookkeeping.
struct ReportRow {
  std::optional<std::uint64_t> n;
  std::string quantity;
  std::optional<Rational> exact;
  std::optional<double> decimal;
  std::optional<double> empirical;
  std::optional<double> std_error;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
};

/// 15 significant digits, locale-independent.
std::string format_decimal(double value);

inline constexpr const char* kCsvHeader =
    "n,quantity,exact,decimal,empirical,stderr,samples,seed";

std::string rows_to_csv(std::span<const ReportRow> rows);
std::string rows_to_json(std::span<const ReportRow> rows);

enum class ReportFormat { csv, json };

std::string render_rows(std::span<const ReportRow> rows, ReportFormat format);

}  // namespace dplab

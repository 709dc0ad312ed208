#include "dplab/report.hpp"

#include <charconv>

#include <json.hpp>

namespace dplab {

std::string format_decimal(double value) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 15);
  return std::string(buf, res.ptr);
}

std::string rows_to_csv(std::span<const ReportRow> rows) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const ReportRow& row : rows) {
    if (row.n) out += std::to_string(*row.n);
    out += ',';
    out += row.quantity;
    out += ',';
    if (row.exact) out += row.exact->to_string();
    out += ',';
    if (row.decimal) out += format_decimal(*row.decimal);
    out += ',';
    if (row.empirical) out += format_decimal(*row.empirical);
    out += ',';
    if (row.std_error) out += format_decimal(*row.std_error);
    out += ',';
    if (row.samples) out += std::to_string(*row.samples);
    out += ',';
    if (row.seed) out += std::to_string(*row.seed);
    out += '\n';
  }
  return out;
}

std::string rows_to_json(std::span<const ReportRow> rows) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const ReportRow& row : rows) {
    nlohmann::ordered_json record;
    record["n"] = row.n ? nlohmann::ordered_json(*row.n) : nullptr;
    record["quantity"] = row.quantity;
    record["exact"] = row.exact ? nlohmann::ordered_json(row.exact->to_string()) : nullptr;
    record["decimal"] = row.decimal ? nlohmann::ordered_json(format_decimal(*row.decimal)) : nullptr;
    record["empirical"] =
        row.empirical ? nlohmann::ordered_json(format_decimal(*row.empirical)) : nullptr;
    record["stderr"] =
        row.std_error ? nlohmann::ordered_json(format_decimal(*row.std_error)) : nullptr;
    record["samples"] = row.samples ? nlohmann::ordered_json(*row.samples) : nullptr;
    record["seed"] = row.seed ? nlohmann::ordered_json(*row.seed) : nullptr;
    array.push_back(std::move(record));
  }
  return array.dump(2) + "\n";
}

std::string render_rows(std::span<const ReportRow> rows, ReportFormat format) {
  return format == ReportFormat::csv ? rows_to_csv(rows) : rows_to_json(rows);
}

}  // namespace dplab

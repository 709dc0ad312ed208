#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "dplab/analysis.hpp"
#include "dplab/report.hpp"
#include "dplab/simulate.hpp"
#include "dplab/verify.hpp"

using namespace dplab;

TEST_CASE("decimal formatting is stable and 15 significant digits") {
  CHECK(format_decimal(4.75) == "4.75");
  CHECK(format_decimal(1.0 / 3.0) == "0.333333333333333");
  CHECK(format_decimal(-2.3823823670652) == "-2.3823823670652");
}

TEST_CASE("CSV header and row shape") {
  ReportRow row;
  row.n = 4;
  row.quantity = "total_count";
  row.exact = Rational(19, 4);
  row.decimal = 4.75;
  const std::string csv = rows_to_csv(std::vector<ReportRow>{row});
  CHECK(csv == std::string(kCsvHeader) +
                   "\n4,total_count,19/4,4.75,,,,\n");
}

TEST_CASE("JSON rendering carries the same records") {
  ReportRow row;
  row.n = 4;
  row.quantity = "total_count";
  row.exact = Rational(19, 4);
  row.decimal = 4.75;
  const auto parsed = nlohmann::json::parse(rows_to_json(std::vector<ReportRow>{row}));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0]["n"] == 4);
  CHECK(parsed[0]["quantity"] == "total_count");
  CHECK(parsed[0]["exact"] == "19/4");
  CHECK(parsed[0]["decimal"] == "4.75");
  CHECK(parsed[0]["empirical"].is_null());
  CHECK(parsed[0]["seed"].is_null());
}

TEST_CASE("exact fields round-trip to the library values") {
  const CostTable count_table = solve_recurrence(partition_cost_count, 20);
  for (unsigned n = 1; n <= 20; ++n) {
    ReportRow row;
    row.n = n;
    row.quantity = "total_count";
    row.exact = count_table.total[n];
    row.decimal = count_table.total[n].to_double();
    const std::string csv = rows_to_csv(std::vector<ReportRow>{row});
    const auto line_start = csv.find('\n') + 1;
    const auto fields_start = csv.find(',', csv.find(',', line_start) + 1) + 1;
    const auto fields_end = csv.find(',', fields_start);
    const std::string exact_text = csv.substr(fields_start, fields_end - fields_start);
    CHECK(Rational::from_string(exact_text) == count_table.total[n]);
  }
}

TEST_CASE("simulations are reproducible and thread-count independent") {
  const auto once = run_simulation(SimTarget::path_zeros, 64, 4000, 99, 1);
  const auto twice = run_simulation(SimTarget::path_zeros, 64, 4000, 99, 1);
  const auto threaded = run_simulation(SimTarget::path_zeros, 64, 4000, 99, 3);
  const std::string a = rows_to_csv(once);
  const std::string b = rows_to_csv(twice);
  const std::string c = rows_to_csv(threaded);
  CHECK(a == b);
  CHECK(a == c);

  const auto other_seed = run_simulation(SimTarget::path_zeros, 64, 4000, 100, 1);
  CHECK(rows_to_csv(other_seed) != a);
}

TEST_CASE("simulation rows look statistically sane") {
  const auto rows = run_simulation(SimTarget::path_zeros, 64, 20000, 7, 2);
  REQUIRE(rows.size() == 2);
  for (const auto& row : rows) {
    REQUIRE(row.exact.has_value());
    REQUIRE(row.empirical.has_value());
    REQUIRE(row.std_error.has_value());
    const double z = (*row.empirical - row.exact->to_double()) / *row.std_error;
    CHECK(std::abs(z) < 4.0);
  }

  const auto pmf_rows = run_simulation(SimTarget::path_distribution, 30, 20000, 11, 2);
  REQUIRE(pmf_rows.size() > 3);
  for (std::size_t i = 1; i < pmf_rows.size(); ++i) {
    const auto& row = pmf_rows[i];
    const double z =
        (*row.empirical - row.exact->to_double()) / std::max(*row.std_error, 1e-9);
    CHECK(std::abs(z) < 5.0);
  }
}

TEST_CASE("sort simulations agree with the exact averages") {
  for (const SimTarget target : {SimTarget::sort_count, SimTarget::sort_clairvoyant}) {
    const auto rows = run_simulation(target, 64, 4000, 3, 2);
    REQUIRE(rows.size() == 1);
    const double z = (*rows[0].empirical - rows[0].exact->to_double()) /
                     *rows[0].std_error;
    CHECK(std::abs(z) < 4.0);
  }
}

TEST_CASE("urn verification suite passes") {
  for (const auto& result : run_suite("urn")) {
    INFO(result.name, ": ", result.detail);
    CHECK(result.ok);
  }
  CHECK_THROWS_AS(run_suite("bogus"), std::invalid_argument);
}

TEST_CASE("check rendering") {
  const std::vector<CheckResult> checks{{"a/one", true, ""}, {"b/two", false, "x, y"}};
  CHECK(render_checks(checks, ReportFormat::csv) ==
        "check,ok,detail\na/one,ok,\nb/two,FAIL,x; y\n");
  const auto parsed = nlohmann::json::parse(render_checks(checks, ReportFormat::json));
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[1]["check"] == "b/two");
  CHECK(parsed[1]["ok"] == false);
}

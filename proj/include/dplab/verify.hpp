#pragma once

#include <span>
#include <string>
#include <vector>

#include "dplab/report.hpp"

namespace dplab {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;  // filled in on failure, or with a short observation
};

/// One line per check: "check,ok,detail" rows for csv, an array of
/// {check, ok, detail} records for json.
std::string render_checks(std::span<const CheckResult> checks, ReportFormat format);

/// The four expressions of the zero-count identity agree, and the double
/// sum matches the closed form, for n = 0..300.
std::vector<CheckResult> verify_identity();

/// Zero-count distribution: normalization and mean for n <= 100, exact
/// match against path enumeration for n <= 14, and the discrete limit law
/// within 0.01 at n = 400 for r <= 5.
std::vector<CheckResult> verify_distribution();

/// The count-state dynamic program matches strategy "Count" exactly for
/// n <= 200, and exhaustive strategy enumeration confirms the minimum for
/// n in {2..5}.
std::vector<CheckResult> verify_optimality();

/// Urn transition law: uniform endpoint distribution for h = 2, n <= 30;
/// path probabilities match the two-stage model; h = 3 levels are uniform.
std::vector<CheckResult> verify_urn();

/// The "Count" quicksort never averages more comparisons than classical
/// quicksort for n = 1..200, with equality exactly at n in {1, 2, 3}.
std::vector<CheckResult> verify_dominance();

std::vector<CheckResult> run_suite(const std::string& name);

}  // namespace dplab

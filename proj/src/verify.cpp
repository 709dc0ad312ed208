#include "dplab/verify.hpp"

#include <stdexcept>

#include <json.hpp>

#include "dplab/analysis.hpp"
#include "dplab/lattice_paths.hpp"
#include "dplab/optimality.hpp"

namespace dplab {

std::string render_checks(std::span<const CheckResult> checks, ReportFormat format) {
  if (format == ReportFormat::json) {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const CheckResult& check : checks) {
      array.push_back({{"check", check.name}, {"ok", check.ok}, {"detail", check.detail}});
    }
    return array.dump(2) + "\n";
  }
  std::string out = "check,ok,detail\n";
  for (const CheckResult& check : checks) {
    std::string detail = check.detail;
    for (char& c : detail)
      if (c == ',' || c == '\n') c = ';';
    out += check.name + "," + (check.ok ? "ok" : "FAIL") + "," + detail + "\n";
  }
  return out;
}

namespace {

void check(std::vector<CheckResult>& out, std::string name, bool ok,
           std::string detail = {}) {
  out.push_back({std::move(name), ok, ok ? std::string{} : std::move(detail)});
}

std::string mismatch(const Rational& expected, const Rational& got) {
  return "expected " + expected.to_string() + ", got " + got.to_string();
}

}  // namespace

std::vector<CheckResult> verify_identity() {
  std::vector<CheckResult> results;
  for (unsigned n = 0; n <= 300; ++n) {
    const auto quad = identity_quadruple(n);
    // quad[0] is the double sum and quad[3] the closed form, so componentwise
    // equality also covers the expectation cross-check.
    const bool equal = quad[0] == quad[1] && quad[0] == quad[2] && quad[0] == quad[3];
    check(results, "identity/n=" + std::to_string(n), equal,
          quad[0].to_string() + " | " + quad[1].to_string() + " | " +
              quad[2].to_string() + " | " + quad[3].to_string());
  }
  return results;
}

std::vector<CheckResult> verify_distribution() {
  std::vector<CheckResult> results;
  for (unsigned n = 0; n <= 100; ++n) {
    Rational total(0);
    Rational mean(0);
    for (unsigned r = 1; r <= n / 2 + 1; ++r) {
      const Rational p = zeros_distribution(n, r);
      total += p;
      mean += Rational(Int(r)) * p;
    }
    check(results, "distribution/normalization n=" + std::to_string(n),
          total == Rational(1), "sum " + total.to_string());
    check(results, "distribution/mean n=" + std::to_string(n),
          mean == expected_zeros_closed(n),
          mismatch(expected_zeros_closed(n), mean));
  }
  for (unsigned n = 0; n <= 14; ++n) {
    const ExhaustiveStats oracle = enumerate_paths(n);
    bool ok = oracle.expected_zeros == expected_zeros_closed(n) &&
              oracle.expected_up_from_zero == expected_up_from_zero(n);
    for (unsigned r = 1; r < oracle.zero_count_pmf.size() && ok; ++r)
      ok = oracle.zero_count_pmf[r] == zeros_distribution(n, r);
    check(results, "distribution/enumeration n=" + std::to_string(n), ok);
  }
  {
    bool ok = true;
    std::string detail;
    for (unsigned r = 1; r <= 5; ++r) {
      const Rational limit(Int(1), Int(r) * Int(r + 1));
      const Rational gap = abs(zeros_distribution(400, r) - limit);
      if (!(gap <= Rational(1, 100))) {
        ok = false;
        detail = "r=" + std::to_string(r) + " gap " + gap.to_string();
      }
    }
    check(results, "distribution/limit-law n=400", ok, detail);
  }
  return results;
}

std::vector<CheckResult> verify_optimality() {
  std::vector<CheckResult> results;
  const AdditionalCostProfile count_profile(
      [](const CountState& s) { return count_strategy({s.small, s.medium, s.large}); },
      198);
  for (unsigned n = 2; n <= 200; ++n) {
    const Rational dp = min_additional_cost(n);
    const Rational count_cost = count_profile.cost_for(n);
    check(results, "optimality/dp-vs-count n=" + std::to_string(n), dp == count_cost,
          mismatch(dp, count_cost));
  }
  for (unsigned n = 2; n <= 5; ++n) {
    const EnumerationResult en = enumerate_strategies(n);
    const Rational dp = min_additional_cost(n);
    check(results, "optimality/exhaustive n=" + std::to_string(n),
          en.minimum == dp && en.count_attains && en.optima_match_count_off_ties,
          "minimum " + en.minimum.to_string() + ", dp " + dp.to_string());
  }
  return results;
}

std::vector<CheckResult> verify_urn() {
  std::vector<CheckResult> results;
  for (unsigned n = 0; n <= 30; ++n) {
    const auto endpoints = urn_endpoint_distribution(2, n);
    bool ok = endpoints.size() == n + 1;
    const Rational uniform(Int(1), Int(n + 1));
    for (const auto& [state, prob] : endpoints)
      if (prob != uniform) ok = false;
    check(results, "urn/h2-uniform-endpoints n=" + std::to_string(n), ok);
  }
  {
    // Path probability depends only on the endpoint: one representative word
    // per endpoint must carry probability 1/((n+1) C(n, l)).
    bool ok = true;
    for (unsigned n = 0; n <= 30 && ok; ++n) {
      const auto row = binomial_row(n);
      for (unsigned l = 0; l <= n && ok; ++l) {
        std::vector<unsigned> word(n, 0);
        for (unsigned i = 0; i < l; ++i) word[n - 1 - i] = 1;
        ok = urn_path_probability(2, word) == Rational(Int(1), Int(n + 1) * row[l]);
      }
    }
    check(results, "urn/h2-path-law-representatives", ok);
  }
  {
    bool ok = true;
    for (unsigned n = 0; n <= 8 && ok; ++n) {
      const auto levels = urn_endpoint_distribution(3, n);
      const Rational uniform(Int(2), Int(n + 1) * Int(n + 2));
      for (const auto& [state, prob] : levels)
        if (prob != uniform) ok = false;
    }
    check(results, "urn/h3-uniform-levels", ok);
  }
  return results;
}

std::vector<CheckResult> verify_dominance() {
  std::vector<CheckResult> results;
  for (unsigned n = 1; n <= 200; ++n) {
    const Rational count = total_cost_count_closed(n);
    const Rational classic = classic_cost(n);
    const bool expected_equal = n <= 3;
    const bool ok = expected_equal ? count == classic : count < classic;
    check(results, "dominance/n=" + std::to_string(n), ok,
          "count " + count.to_string() + ", classic " + classic.to_string());
  }
  return results;
}

std::vector<CheckResult> run_suite(const std::string& name) {
  if (name == "identity") return verify_identity();
  if (name == "distribution") return verify_distribution();
  if (name == "optimality") return verify_optimality();
  if (name == "urn") return verify_urn();
  if (name == "dominance") return verify_dominance();
  throw std::invalid_argument("unknown verification suite: " + name);
}

}  // namespace dplab

// dplab: exact tables, brute-force oracles, seeded Monte Carlo experiments,
// and verification suites for dual-pivot quicksort comparison counts.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "dplab/analysis.hpp"
#include "dplab/report.hpp"
#include "dplab/simulate.hpp"
#include "dplab/sort.hpp"
#include "dplab/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct CommonOptions {
  std::string format = "csv";
  std::string out_path;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", common.out_path, "Write the report to this file");
  cmd->add_option("--threads", common.threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

int emit(const std::string& text, const CommonOptions& common) {
  if (common.out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(common.out_path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << common.out_path << "\n";
    return kExitIo;
  }
  return kExitOk;
}

dplab::ReportFormat parse_format(const std::string& format) {
  return format == "json" ? dplab::ReportFormat::json : dplab::ReportFormat::csv;
}

dplab::ReportRow exact_row(unsigned n, std::string quantity, const dplab::Rational& value) {
  dplab::ReportRow row;
  row.n = n;
  row.quantity = std::move(quantity);
  row.exact = value;
  row.decimal = value.to_double();
  return row;
}

std::vector<dplab::ReportRow> exact_rows(unsigned from, unsigned to) {
  using namespace dplab;
  const auto count_table = solve_recurrence(partition_cost_count, to);
  const auto oracle_table = solve_recurrence(partition_cost_clairvoyant, to);
  std::vector<ReportRow> rows;
  for (unsigned n = from; n <= to; ++n) {
    rows.push_back(exact_row(n, "total_count", count_table.total[n]));
    rows.push_back(exact_row(n, "total_clairvoyant", oracle_table.total[n]));
    rows.push_back(exact_row(n, "total_classic", classic_cost(n)));
    if (n >= 2) {
      rows.push_back(exact_row(n, "partition_count", count_table.partition[n]));
      rows.push_back(exact_row(n, "partition_clairvoyant", oracle_table.partition[n]));
    }
    for (const Variant variant : {Variant::count, Variant::clairvoyant}) {
      ReportRow row;
      row.n = n;
      row.quantity = variant == Variant::count ? "asymptotic_total_count"
                                               : "asymptotic_total_clairvoyant";
      row.decimal = asymptotic_total(variant, n);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

int run_exact(unsigned from, unsigned to, const CommonOptions& common) {
  if (from < 1 || to < from) {
    std::cerr << "error: need 1 <= from <= to\n";
    return kExitUsage;
  }
  return emit(dplab::render_rows(exact_rows(from, to), parse_format(common.format)),
              common);
}

int run_bruteforce(unsigned n, const std::string& algo, const CommonOptions& common) {
  using namespace dplab;
  if (n < 1 || n > 8) {
    std::cerr << "error: bruteforce sweeps all n! permutations and is limited to "
                 "1 <= n <= 8\n";
    return kExitUsage;
  }
  SortAlgo sort_algo;
  Rational reference;
  if (algo == "count") {
    sort_algo = SortAlgo::count;
    reference = total_cost_count_closed(n);
  } else if (algo == "clairvoyant") {
    sort_algo = SortAlgo::clairvoyant;
    reference = total_cost_clairvoyant_closed(n);
  } else {
    sort_algo = SortAlgo::classic;
    reference = classic_cost(n);
  }
  const SweepResult sweep = permutation_sweep(n, sort_algo, common.threads);
  const bool match = sweep.average == reference;

  std::vector<ReportRow> rows;
  rows.push_back(exact_row(n, "bruteforce_average_" + algo, sweep.average));
  rows.push_back(exact_row(n, "reference_" + algo, reference));
  ReportRow verdict;
  verdict.n = n;
  verdict.quantity = match ? "verdict_match" : "verdict_mismatch";
  rows.push_back(std::move(verdict));

  const int rc = emit(dplab::render_rows(rows, parse_format(common.format)), common);
  if (rc != kExitOk) return rc;
  return match ? kExitOk : kExitVerificationFailure;
}

int run_simulate(const std::string& target_name, unsigned n, std::uint64_t samples,
                 std::uint64_t seed, const CommonOptions& common) {
  using namespace dplab;
  if (samples < 100) {
    std::cerr << "error: simulate needs --samples >= 100\n";
    return kExitUsage;
  }
  SimTarget target;
  if (target_name == "sort-count") target = SimTarget::sort_count;
  else if (target_name == "sort-clairvoyant") target = SimTarget::sort_clairvoyant;
  else if (target_name == "path-zeros") target = SimTarget::path_zeros;
  else target = SimTarget::path_distribution;

  const auto rows = run_simulation(target, n, samples, seed, common.threads);
  return emit(dplab::render_rows(rows, parse_format(common.format)), common);
}

int run_verify(const std::string& suite, const CommonOptions& common) {
  const auto results = dplab::run_suite(suite);
  std::size_t failures = 0;
  for (const auto& result : results)
    if (!result.ok) ++failures;
  const int rc = emit(dplab::render_checks(results, parse_format(common.format)), common);
  if (rc != kExitOk) return rc;
  std::cerr << "suite " << suite << ": " << results.size() << " checks, " << failures
            << " failures\n";
  return failures == 0 ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact and empirical comparison counts for dual-pivot quicksort with the "
      "count-based partitioning strategy"};
  app.require_subcommand(1);

  CommonOptions common;

  auto* exact = app.add_subcommand("exact", "Tabulate exact expected costs");
  unsigned from = 1, to = 20;
  exact->add_option("--from", from, "First n")->capture_default_str();
  exact->add_option("--to", to, "Last n")->capture_default_str();
  add_common(exact, common);

  auto* bruteforce =
      app.add_subcommand("bruteforce", "Average one sort over all n! permutations");
  unsigned bf_n = 4;
  std::string algo = "count";
  bruteforce->add_option("--n", bf_n, "Input size (<= 8)")->required();
  bruteforce->add_option("--algo", algo, "Algorithm")
      ->check(CLI::IsMember({"count", "clairvoyant", "classic"}))
      ->capture_default_str();
  add_common(bruteforce, common);

  auto* simulate = app.add_subcommand("simulate", "Seeded Monte Carlo experiment");
  unsigned sim_n = 1000;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  std::string target = "path-zeros";
  simulate->add_option("--n", sim_n, "Instance size")->required();
  simulate->add_option("--samples", samples, "Number of samples (>= 100)")
      ->capture_default_str();
  simulate->add_option("--seed", seed, "Master seed (default 1)")
      ->envname("DPLAB_SEED")
      ->capture_default_str();
  simulate->add_option("--target", target, "Quantity to simulate")
      ->check(CLI::IsMember(
          {"sort-count", "sort-clairvoyant", "path-zeros", "path-distribution"}))
      ->capture_default_str();
  add_common(simulate, common);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "identity";
  verify->add_option("--suite", suite, "Suite name")
      ->check(CLI::IsMember(
          {"identity", "distribution", "optimality", "urn", "dominance"}))
      ->required();
  add_common(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e);
      return kExitOk;
    }
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (exact->parsed()) return run_exact(from, to, common);
    if (bruteforce->parsed()) return run_bruteforce(bf_n, algo, common);
    if (simulate->parsed()) return run_simulate(target, sim_n, samples, seed, common);
    if (verify->parsed()) return run_verify(suite, common);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

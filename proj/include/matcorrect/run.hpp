#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "matcorrect/correction.hpp"
#include "matcorrect/injection.hpp"
#include "matcorrect/matrix.hpp"

namespace matcorrect {

enum class Algorithm { baseline, fast, both };

Algorithm parse_algorithm(std::string_view name);

/// Process exit codes of the command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitInputError = 2,
  kExitCapacity = 3,
};

struct RunConfig {
  Algorithm algorithm = Algorithm::fast;
  std::size_t k = 0;  // declared error bound
  bool verify = false;
  std::size_t verify_trials = 30;
  std::uint64_t seed = 1;
  std::size_t oracle_cap = 512;

  // Either all three paths are set, or the triple is generated from the fields below.
  std::optional<std::string> a_path;
  std::optional<std::string> b_path;
  std::optional<std::string> c_path;

  std::size_t n = 0;
  Value alpha = 100;
  InjectionPattern pattern = InjectionPattern::uniform;
  std::optional<std::size_t> inject_count;  // defaults to k
  Value delta_min = -10;
  Value delta_max = 10;
};

enum class OracleOutcome { match, mismatch, skipped };

std::string_view oracle_name(OracleOutcome outcome);

struct AlgorithmRun {
  CorrectionReport report;
  double wall_ms = 0.0;
  bool precondition_violated = false;
  OracleOutcome oracle = OracleOutcome::skipped;
  std::optional<bool> matches_injection;
  Matrix corrected;

  bool ok() const noexcept {
    return !precondition_violated && oracle != OracleOutcome::mismatch && report.verified.value_or(true) &&
           matches_injection.value_or(true);
  }
};

struct RunResult {
  std::size_t n = 0;
  Value alpha = 0;
  std::optional<std::vector<InjectedError>> injected;
  std::vector<AlgorithmRun> runs;
  bool algorithms_agree = true;

  int exit_code() const noexcept;
};

/// Loads or generates (A, B, C), runs the selected algorithm(s) on private
/// copies of C and checks each result. Throws CapacityError when the inputs
/// fail the 4*alpha^2*n^3 check, ParseError or std::invalid_argument for bad
/// input.
RunResult run(const RunConfig& config);

/// Runs on an explicit triple.
RunResult run_on(const Matrix& a, const Matrix& b, const Matrix& c, const RunConfig& config);

/**
 * Line-oriented report: one block per algorithm, each made of "key: value"
 * lines, an "entries:" line, the CSV header "row,col,old,new,phase", one CSV
 * line per corrected entry and a terminating blank line.
 */
void write_report(std::ostream& out, const RunResult& result);

struct ParsedReport {
  std::map<std::string, std::string> fields;
  std::vector<CorrectedEntry> entries;
};

/// Inverse of write_report, for tools and tests that consume reports.
std::vector<ParsedReport> parse_report(const std::string& text);

}  // namespace matcorrect

#include "matcorrect/run.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "matcorrect/core_math.hpp"
#include "matcorrect/matrix_io.hpp"

namespace matcorrect {
namespace {

bool same_as_injection(const std::vector<CorrectedEntry>& corrected, const std::vector<InjectedError>& injected) {
  std::set<std::tuple<std::size_t, std::size_t, Value>> lhs;
  std::set<std::tuple<std::size_t, std::size_t, Value>> rhs;
  for (const auto& e : corrected) lhs.emplace(e.row, e.col, e.old_value - e.new_value);
  for (const auto& e : injected) rhs.emplace(e.row, e.col, e.delta);
  return lhs == rhs && corrected.size() == injected.size();
}

AlgorithmRun run_one(Algorithm which, const Matrix& a, const Matrix& b, const Matrix& c, const RunConfig& config,
                     const std::optional<Matrix>& truth) {
  AlgorithmRun out;
  out.corrected = c;
  OpCounter ops;
  const auto start = std::chrono::steady_clock::now();
  try {
    out.report = which == Algorithm::baseline ? correct_baseline(a, b, out.corrected, config.k, ops)
                                              : correct_fast(a, b, out.corrected, config.k, ops);
  } catch (const PreconditionViolated& e) {
    out.report = e.report();
    out.precondition_violated = true;
  }
  const auto stop = std::chrono::steady_clock::now();
  out.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();

  if (config.verify) {
    OpCounter verify_ops;
    out.report.verified = freivalds_verify(a, b, out.corrected, config.verify_trials, config.seed, verify_ops);
  }
  if (truth) out.oracle = out.corrected == *truth ? OracleOutcome::match : OracleOutcome::mismatch;
  return out;
}

}  // namespace

Algorithm parse_algorithm(std::string_view name) {
  if (name == "baseline") return Algorithm::baseline;
  if (name == "fast") return Algorithm::fast;
  if (name == "both") return Algorithm::both;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

std::string_view oracle_name(OracleOutcome outcome) {
  switch (outcome) {
    case OracleOutcome::match:
      return "match";
    case OracleOutcome::mismatch:
      return "mismatch";
    case OracleOutcome::skipped:
      return "skipped";
  }
  return "unknown";
}

int RunResult::exit_code() const noexcept {
  if (!algorithms_agree) return kExitMismatch;
  for (const auto& r : runs) {
    if (!r.ok()) return kExitMismatch;
  }
  return kExitOk;
}

RunResult run_on(const Matrix& a, const Matrix& b, const Matrix& c, const RunConfig& config) {
  if (!a.square() || a.rows() != b.rows() || !b.square() || c.rows() != a.rows() || !c.square()) {
    throw DimensionError("run expects three n x n matrices, got A " + shape_string(a) + ", B " + shape_string(b) +
                         ", C " + shape_string(c));
  }
  check_capacity(a, b, c);

  RunResult result;
  result.n = a.rows();
  result.alpha = std::max({a.max_abs(), b.max_abs(), c.max_abs()});
  std::optional<Matrix> truth;
  if (result.n <= config.oracle_cap) truth = oracle_product(a, b);

  if (config.algorithm != Algorithm::fast) result.runs.push_back(run_one(Algorithm::baseline, a, b, c, config, truth));
  if (config.algorithm != Algorithm::baseline) result.runs.push_back(run_one(Algorithm::fast, a, b, c, config, truth));
  if (result.runs.size() == 2) result.algorithms_agree = result.runs[0].corrected == result.runs[1].corrected;
  return result;
}

RunResult run(const RunConfig& config) {
  const bool from_files = config.a_path || config.b_path || config.c_path;
  if (from_files) {
    if (!config.a_path || !config.b_path || !config.c_path) {
      throw std::invalid_argument("--a, --b and --c must be given together");
    }
    return run_on(read_matrix_file(*config.a_path), read_matrix_file(*config.b_path),
                  read_matrix_file(*config.c_path), config);
  }

  if (config.n == 0) throw std::invalid_argument("either matrix paths or a positive --n is required");
  const std::size_t injected = config.inject_count.value_or(config.k);
  if (injected > config.k) {
    throw std::invalid_argument("injected error count " + std::to_string(injected) + " exceeds declared k=" +
                                std::to_string(config.k));
  }
  std::mt19937_64 rng(config.seed);
  const Matrix a = random_matrix(config.n, config.n, config.alpha, rng);
  const Matrix b = random_matrix(config.n, config.n, config.alpha, rng);
  InjectionSpec spec;
  spec.k = injected;
  spec.pattern = config.pattern;
  spec.seed = config.seed + 1;
  spec.delta_min = config.delta_min;
  spec.delta_max = config.delta_max;
  Injection injection = inject_errors(oracle_product(a, b), spec);

  RunResult result = run_on(a, b, injection.corrupted, config);
  for (auto& r : result.runs) r.matches_injection = same_as_injection(r.report.corrected_entries, injection.errors);
  result.injected = std::move(injection.errors);
  return result;
}

void write_report(std::ostream& out, const RunResult& result) {
  for (const auto& r : result.runs) {
    const CorrectionReport& rep = r.report;
    std::string status = "ok";
    if (r.precondition_violated) {
      status = "precondition-violated";
    } else if (!r.ok() || !result.algorithms_agree) {
      status = "mismatch";
    }
    out << "algorithm: " << rep.algorithm << '\n';
    out << "status: " << status << '\n';
    out << "n: " << rep.n << '\n';
    out << "k: " << rep.k << '\n';
    out << "alpha: " << result.alpha << '\n';
    out << "certificate_width: " << rep.certificate_width << '\n';
    out << "prime: " << rep.prime << '\n';
    if (result.injected) out << "injected: " << result.injected->size() << '\n';
    out << "oracle: " << oracle_name(r.oracle) << '\n';
    out << "verified: " << (rep.verified ? (*rep.verified ? "true" : "false") : "skipped") << '\n';
    if (r.matches_injection) out << "matches_injection: " << (*r.matches_injection ? "true" : "false") << '\n';
    if (result.runs.size() == 2) out << "algorithms_agree: " << (result.algorithms_agree ? "true" : "false") << '\n';
    out << "rows_recomputed: " << rep.rows_recomputed << '\n';
    out << "cols_recomputed: " << rep.cols_recomputed << '\n';
    out << "ops_mults: " << rep.ops.mults << '\n';
    out << "ops_adds: " << rep.ops.adds << '\n';
    out << "ops_total: " << rep.ops.total() << '\n';
    for (const auto& phase : rep.phase_ops) out << "ops_" << phase.name << ": " << phase.ops.total() << '\n';
    out << "max_magnitude: " << rep.ops.max_magnitude << '\n';
    out << "wall_time_ms: " << std::fixed << std::setprecision(3) << r.wall_ms << std::defaultfloat << '\n';
    out << "corrected_count: " << rep.corrected_entries.size() << '\n';
    out << "entries:\n";
    out << "row,col,old,new,phase\n";
    for (const auto& e : rep.corrected_entries) {
      out << e.row << ',' << e.col << ',' << e.old_value << ',' << e.new_value << ',' << phase_name(e.phase) << '\n';
    }
    out << '\n';
  }
}

std::vector<ParsedReport> parse_report(const std::string& text) {
  std::vector<ParsedReport> blocks;
  std::istringstream in(text);
  std::string line;
  ParsedReport current;
  bool in_entries = false;
  bool open = false;
  auto phase_from = [](const std::string& name) {
    for (Phase p : {Phase::phase1, Phase::row_sweep, Phase::col_sweep, Phase::baseline}) {
      if (phase_name(p) == name) return p;
    }
    throw ParseError("unknown phase '" + name + "' in report");
  };
  while (std::getline(in, line)) {
    if (line.empty()) {
      if (open) blocks.push_back(std::move(current));
      current = {};
      in_entries = false;
      open = false;
      continue;
    }
    open = true;
    if (in_entries) {
      if (line == "row,col,old,new,phase") continue;
      std::istringstream csv(line);
      std::string cell;
      std::vector<std::string> cells;
      while (std::getline(csv, cell, ',')) cells.push_back(cell);
      if (cells.size() != 5) throw ParseError("bad entry line '" + line + "'");
      current.entries.push_back({std::stoull(cells[0]), std::stoull(cells[1]), std::stoll(cells[2]),
                                 std::stoll(cells[3]), phase_from(cells[4])});
      continue;
    }
    if (line == "entries:") {
      in_entries = true;
      continue;
    }
    const auto colon = line.find(": ");
    if (colon == std::string::npos) throw ParseError("bad report line '" + line + "'");
    current.fields[line.substr(0, colon)] = line.substr(colon + 2);
  }
  if (open) blocks.push_back(std::move(current));
  return blocks;
}

}  // namespace matcorrect

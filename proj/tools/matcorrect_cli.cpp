// Command line front end: gen, inject, correct and bench.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "matcorrect/benchmark.hpp"
#include "matcorrect/correction.hpp"
#include "matcorrect/injection.hpp"
#include "matcorrect/matrix_io.hpp"
#include "matcorrect/run.hpp"

using namespace matcorrect;

namespace {

// Writes to `path`, or stdout when the path is empty.
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  fn(out);
}

std::size_t oracle_cap_from_env(std::size_t fallback) {
  const char* env = std::getenv("MATCORRECT_ORACLE_CAP");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("MATCORRECT_ORACLE_CAP is not a number: ") + env);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Detect and correct sparse errors in integer matrix products"};
  app.require_subcommand(1);

  // gen
  std::size_t gen_n = 0;
  Value gen_alpha = 100;
  std::uint64_t gen_seed = 1;
  std::string gen_a, gen_b, gen_c;
  auto* gen = app.add_subcommand("gen", "Generate random A and B with entries in [-alpha, alpha]");
  gen->add_option("--n", gen_n, "Dimension")->required()->check(CLI::PositiveNumber);
  gen->add_option("--alpha", gen_alpha, "Largest absolute entry")->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--a", gen_a, "Output path for A")->required();
  gen->add_option("--b", gen_b, "Output path for B")->required();
  gen->add_option("--c", gen_c, "Optional output path for the exact product AB");

  // inject
  std::string inj_c, inj_out, inj_truth, inj_pattern = "uniform";
  std::size_t inj_k = 0;
  std::uint64_t inj_seed = 1;
  Value inj_dmin = -10, inj_dmax = 10;
  auto* inject = app.add_subcommand("inject", "Corrupt exactly k entries of a matrix");
  inject->add_option("--c", inj_c, "Input matrix")->required();
  inject->add_option("--k", inj_k, "Number of entries to corrupt")->required();
  inject->add_option("--pattern", inj_pattern, "uniform, cross or row-heavy")
      ->check(CLI::IsMember({"uniform", "cross", "row-heavy"}));
  inject->add_option("--seed", inj_seed, "RNG seed");
  inject->add_option("--delta-min", inj_dmin, "Smallest delta (inclusive)");
  inject->add_option("--delta-max", inj_dmax, "Largest delta (inclusive)");
  inject->add_option("--out", inj_out, "Output path for the corrupted matrix (default stdout)");
  inject->add_option("--truth", inj_truth, "Output path for the injected (row,col,delta) list");

  // correct
  RunConfig cfg;
  std::string algo = "fast", pattern = "uniform", out_path, corrected_path;
  std::string a_path, b_path, c_path;
  std::size_t inject_count = 0;
  auto* correct = app.add_subcommand("correct", "Correct C so that C = AB, given at most k wrong entries");
  correct->add_option("--a", a_path, "Path of A");
  correct->add_option("--b", b_path, "Path of B");
  correct->add_option("--c", c_path, "Path of C");
  correct->add_option("--k", cfg.k, "Declared bound on the number of wrong entries")->required();
  correct->add_option("--algo", algo, "baseline, fast or both")->check(CLI::IsMember({"baseline", "fast", "both"}));
  correct->add_option("--seed", cfg.seed, "Seed for generation and verification");
  correct->add_flag("--verify", cfg.verify, "Run a 30-trial Freivalds check on the result");
  correct->add_option("--oracle-cap", cfg.oracle_cap, "Largest n compared against the schoolbook product");
  correct->add_option("--out", out_path, "Report path (default stdout)");
  correct->add_option("--corrected", corrected_path, "Write the corrected C here");
  correct->add_option("--n", cfg.n, "Generate a random instance of this size instead of reading files");
  correct->add_option("--alpha", cfg.alpha, "Entry bound for generated A and B")->check(CLI::NonNegativeNumber);
  correct->add_option("--pattern", pattern, "Injection pattern for generated instances")
      ->check(CLI::IsMember({"uniform", "cross", "row-heavy"}));
  auto* inject_opt = correct->add_option("--inject", inject_count, "Errors to inject (default k)");

  // bench
  BenchmarkConfig bench_cfg;
  std::string bench_algo = "both", bench_pattern = "uniform", bench_out;
  auto* bench = app.add_subcommand("bench", "Operation counts over a grid of (n, k)");
  bench->add_option("--ns", bench_cfg.ns, "Matrix sizes")->required()->delimiter(',');
  bench->add_option("--ks", bench_cfg.ks, "Error counts")->required()->delimiter(',');
  bench->add_option("--reps", bench_cfg.repetitions, "Repetitions per cell")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_cfg.seed, "Base seed");
  bench->add_option("--algo", bench_algo, "baseline, fast or both")->check(CLI::IsMember({"baseline", "fast", "both"}));
  bench->add_option("--pattern", bench_pattern, "Injection pattern")
      ->check(CLI::IsMember({"uniform", "cross", "row-heavy"}));
  bench->add_option("--alpha", bench_cfg.alpha, "Entry bound for A and B")->check(CLI::NonNegativeNumber);
  bench->add_option("--out", bench_out, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*gen) {
      std::mt19937_64 rng(gen_seed);
      const Matrix a = random_matrix(gen_n, gen_n, gen_alpha, rng);
      const Matrix b = random_matrix(gen_n, gen_n, gen_alpha, rng);
      write_matrix_file(gen_a, a);
      write_matrix_file(gen_b, b);
      if (!gen_c.empty()) write_matrix_file(gen_c, oracle_product(a, b));
      return kExitOk;
    }

    if (*inject) {
      InjectionSpec spec;
      spec.k = inj_k;
      spec.pattern = parse_pattern(inj_pattern);
      spec.seed = inj_seed;
      spec.delta_min = inj_dmin;
      spec.delta_max = inj_dmax;
      const Injection result = inject_errors(read_matrix_file(inj_c), spec);
      with_output(inj_out, [&](std::ostream& out) { write_matrix(out, result.corrupted); });
      if (!inj_truth.empty()) {
        with_output(inj_truth, [&](std::ostream& out) {
          out << "row,col,delta\n";
          for (const auto& e : result.errors) out << e.row << ',' << e.col << ',' << e.delta << '\n';
        });
      }
      return kExitOk;
    }

    if (*correct) {
      cfg.algorithm = parse_algorithm(algo);
      cfg.pattern = parse_pattern(pattern);
      cfg.oracle_cap = oracle_cap_from_env(cfg.oracle_cap);
      if (!a_path.empty()) cfg.a_path = a_path;
      if (!b_path.empty()) cfg.b_path = b_path;
      if (!c_path.empty()) cfg.c_path = c_path;
      if (inject_opt->count() > 0) cfg.inject_count = inject_count;
      const RunResult result = run(cfg);
      with_output(out_path, [&](std::ostream& out) { write_report(out, result); });
      if (!corrected_path.empty() && !result.runs.empty()) {
        write_matrix_file(corrected_path, result.runs.back().corrected);
      }
      return result.exit_code();
    }

    if (*bench) {
      bench_cfg.algorithm = parse_algorithm(bench_algo);
      bench_cfg.pattern = parse_pattern(bench_pattern);
      const auto rows = benchmark(bench_cfg);
      with_output(bench_out, [&](std::ostream& out) { write_benchmark_csv(out, rows); });
      for (const auto& r : rows) {
        if (!r.correct) return kExitMismatch;
      }
      return kExitOk;
    }
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

#include "matcorrect/benchmark.hpp"

#include <chrono>
#include <iomanip>
#include <random>
#include <stdexcept>

#include "matcorrect/core_math.hpp"
#include "matcorrect/correction.hpp"

namespace matcorrect {

std::vector<BenchmarkRow> benchmark(const BenchmarkConfig& config) {
  if (config.ns.empty() || config.ks.empty() || config.repetitions == 0) {
    throw std::invalid_argument("benchmark grid is empty");
  }
  for (std::size_t n : config.ns) {
    if (n == 0) throw std::invalid_argument("benchmark sizes must be positive");
    for (std::size_t k : config.ks) {
      if (k > n * n) throw std::invalid_argument("k=" + std::to_string(k) + " exceeds n^2 for n=" + std::to_string(n));
    }
  }

  std::vector<BenchmarkRow> rows;
  for (std::size_t n : config.ns) {
    for (std::size_t k : config.ks) {
      for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
        std::seed_seq seq{config.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k),
                          static_cast<std::uint64_t>(rep)};
        std::mt19937_64 rng(seq);
        const Matrix a = random_matrix(n, n, config.alpha, rng);
        const Matrix b = random_matrix(n, n, config.alpha, rng);
        const Matrix truth = oracle_product(a, b);
        InjectionSpec spec;
        spec.k = k;
        spec.pattern = config.pattern;
        spec.seed = rng();
        const Matrix corrupted = inject_errors(truth, spec).corrupted;
        check_capacity(a, b, corrupted);

        auto measure = [&](Algorithm which) {
          Matrix c = corrupted;
          OpCounter ops;
          const auto start = std::chrono::steady_clock::now();
          bool correct = true;
          try {
            if (which == Algorithm::baseline) {
              correct_baseline(a, b, c, k, ops);
            } else {
              correct_fast(a, b, c, k, ops);
            }
          } catch (const PreconditionViolated&) {
            correct = false;
          }
          const auto stop = std::chrono::steady_clock::now();
          BenchmarkRow row;
          row.n = n;
          row.k = k;
          row.algorithm = which == Algorithm::baseline ? "baseline" : "fast";
          row.repetition = rep;
          row.mults = ops.mults;
          row.adds = ops.adds;
          row.ops = ops.total();
          row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
          row.correct = correct && c == truth;
          rows.push_back(row);
        };
        if (config.algorithm != Algorithm::fast) measure(Algorithm::baseline);
        if (config.algorithm != Algorithm::baseline) measure(Algorithm::fast);
      }
    }
  }
  return rows;
}

void write_benchmark_csv(std::ostream& out, const std::vector<BenchmarkRow>& rows) {
  out << "n,k,algorithm,rep,mults,adds,ops,wall_ms,correct\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.k << ',' << r.algorithm << ',' << r.repetition << ',' << r.mults << ',' << r.adds << ','
        << r.ops << ',' << std::fixed << std::setprecision(3) << r.wall_ms << std::defaultfloat << ','
        << (r.correct ? "true" : "false") << '\n';
  }
}

}  // namespace matcorrect

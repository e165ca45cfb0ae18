#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "matcorrect/injection.hpp"
#include "matcorrect/run.hpp"

namespace matcorrect {

struct BenchmarkConfig {
  std::vector<std::size_t> ns;
  std::vector<std::size_t> ks;
  std::size_t repetitions = 1;
  std::uint64_t seed = 1;
  Algorithm algorithm = Algorithm::both;
  InjectionPattern pattern = InjectionPattern::uniform;
  Value alpha = 10;
};

struct BenchmarkRow {
  std::size_t n = 0;
  std::size_t k = 0;
  std::string algorithm;
  std::size_t repetition = 0;
  std::uint64_t mults = 0;
  std::uint64_t adds = 0;
  std::uint64_t ops = 0;
  double wall_ms = 0.0;
  bool correct = false;  // final C equals AB
};

/// One row per (n, k, repetition, algorithm). Every cell draws A and B from a
/// seed derived from (seed, n, k, repetition), sets C = AB and injects exactly
/// k errors, so op counts are reproducible.
std::vector<BenchmarkRow> benchmark(const BenchmarkConfig& config);

void write_benchmark_csv(std::ostream& out, const std::vector<BenchmarkRow>& rows);

}  // namespace matcorrect

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "matcorrect/matrix.hpp"

namespace matcorrect {

enum class InjectionPattern {
  uniform,    // k distinct positions drawn uniformly
  cross,      // ceil(k/2) in one row, floor(k/2) in one column
  row_heavy,  // rows each carrying ceil(sqrt(k)) + 1 errors, so none is guaranteed detectable
  custom,     // explicit list
};

InjectionPattern parse_pattern(std::string_view name);
std::string_view pattern_name(InjectionPattern pattern);

struct InjectedError {
  std::size_t row = 0;
  std::size_t col = 0;
  Value delta = 0;

  friend bool operator==(const InjectedError&, const InjectedError&) = default;
};

struct InjectionSpec {
  std::size_t k = 0;
  InjectionPattern pattern = InjectionPattern::uniform;
  std::uint64_t seed = 0;
  Value delta_min = -10;  // inclusive; zero is never drawn
  Value delta_max = 10;
  std::vector<InjectedError> custom;  // used when pattern == custom
};

struct Injection {
  Matrix corrupted;
  std::vector<InjectedError> errors;  // sorted by (row, col)
};

/// Returns a copy of `c` with exactly spec.k entries shifted by nonzero deltas.
/// Deterministic in spec.seed. Throws std::invalid_argument when k > n^2, the
/// pattern cannot hold k errors, or the delta range has no nonzero value.
Injection inject_errors(const Matrix& c, const InjectionSpec& spec);

/// rows x cols matrix with entries uniform in [-alpha, alpha].
Matrix random_matrix(std::size_t rows, std::size_t cols, Value alpha, std::mt19937_64& rng);

}  // namespace matcorrect

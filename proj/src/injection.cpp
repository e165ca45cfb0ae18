#include "matcorrect/injection.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_set>

#include "matcorrect/core_math.hpp"

namespace matcorrect {
namespace {

using Position = std::pair<std::size_t, std::size_t>;

// `count` distinct values from [0, bound), Floyd's method.
std::vector<std::size_t> sample_distinct(std::size_t bound, std::size_t count, std::mt19937_64& rng) {
  std::unordered_set<std::size_t> chosen;
  std::vector<std::size_t> out;
  out.reserve(count);
  for (std::size_t top = bound - count; top < bound; ++top) {
    std::uniform_int_distribution<std::size_t> pick(0, top);
    std::size_t t = pick(rng);
    if (!chosen.insert(t).second) {
      t = top;
      chosen.insert(t);
    }
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Value draw_delta(Value lo, Value hi, std::mt19937_64& rng) {
  const bool spans_zero = lo <= 0 && hi >= 0;
  const Value nonzero_count = hi - lo + (spans_zero ? 0 : 1);
  std::uniform_int_distribution<Value> pick(0, nonzero_count - 1);
  Value v = lo + pick(rng);
  if (spans_zero && v >= 0) ++v;
  return v;
}

std::vector<Position> uniform_positions(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<Position> out;
  for (std::size_t flat : sample_distinct(n * n, k, rng)) out.emplace_back(flat / n, flat % n);
  return out;
}

std::vector<Position> cross_positions(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  const std::size_t in_row = (k + 1) / 2;
  const std::size_t in_col = k / 2;
  if (in_row > n || in_col > n - 1) {
    throw std::invalid_argument("cross pattern cannot place " + std::to_string(k) + " errors in n=" +
                                std::to_string(n));
  }
  std::uniform_int_distribution<std::size_t> line(0, n - 1);
  const std::size_t r = line(rng);
  const std::size_t c = line(rng);
  std::vector<Position> out;
  for (std::size_t j : sample_distinct(n, in_row, rng)) out.emplace_back(r, j);
  // Column errors avoid row r so that no position is used twice.
  for (std::size_t t : sample_distinct(n - 1, in_col, rng)) out.emplace_back(t < r ? t : t + 1, c);
  return out;
}

std::vector<Position> row_heavy_positions(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  const std::size_t per_row = std::min(n, certificate_width_for(k) + 1);
  const std::size_t row_count = (k + per_row - 1) / per_row;
  if (row_count > n) {
    throw std::invalid_argument("row-heavy pattern cannot place " + std::to_string(k) + " errors");
  }
  std::vector<Position> out;
  std::size_t remaining = k;
  for (std::size_t r : sample_distinct(n, row_count, rng)) {
    const std::size_t here = std::min(per_row, remaining);
    for (std::size_t j : sample_distinct(n, here, rng)) out.emplace_back(r, j);
    remaining -= here;
  }
  return out;
}

}  // namespace

InjectionPattern parse_pattern(std::string_view name) {
  if (name == "uniform") return InjectionPattern::uniform;
  if (name == "cross") return InjectionPattern::cross;
  if (name == "row-heavy") return InjectionPattern::row_heavy;
  if (name == "custom") return InjectionPattern::custom;
  throw std::invalid_argument("unknown injection pattern '" + std::string(name) + "'");
}

std::string_view pattern_name(InjectionPattern pattern) {
  switch (pattern) {
    case InjectionPattern::uniform:
      return "uniform";
    case InjectionPattern::cross:
      return "cross";
    case InjectionPattern::row_heavy:
      return "row-heavy";
    case InjectionPattern::custom:
      return "custom";
  }
  return "unknown";
}

Injection inject_errors(const Matrix& c, const InjectionSpec& spec) {
  if (!c.square()) throw DimensionError("inject_errors expects a square matrix, got " + shape_string(c));
  const std::size_t n = c.rows();
  Injection result{c, {}};

  if (spec.pattern == InjectionPattern::custom) {
    std::set<Position> seen;
    for (const auto& e : spec.custom) {
      if (e.row >= n || e.col >= n) throw std::invalid_argument("custom injection position out of range");
      if (e.delta == 0) throw std::invalid_argument("custom injection delta must be nonzero");
      if (!seen.emplace(e.row, e.col).second) throw std::invalid_argument("custom injection repeats a position");
      result.errors.push_back(e);
    }
  } else {
    if (spec.k > n * n) {
      throw std::invalid_argument("cannot inject " + std::to_string(spec.k) + " errors into " + shape_string(c));
    }
    if (spec.delta_min > spec.delta_max || (spec.delta_min == 0 && spec.delta_max == 0)) {
      throw std::invalid_argument("delta range has no nonzero value");
    }
    if (spec.k == 0) return result;
    std::mt19937_64 rng(spec.seed);
    std::vector<Position> positions;
    switch (spec.pattern) {
      case InjectionPattern::uniform:
        positions = uniform_positions(n, spec.k, rng);
        break;
      case InjectionPattern::cross:
        positions = cross_positions(n, spec.k, rng);
        break;
      case InjectionPattern::row_heavy:
        positions = row_heavy_positions(n, spec.k, rng);
        break;
      case InjectionPattern::custom:
        break;
    }
    std::sort(positions.begin(), positions.end());
    for (const auto& [i, j] : positions) {
      result.errors.push_back({i, j, draw_delta(spec.delta_min, spec.delta_max, rng)});
    }
  }

  std::sort(result.errors.begin(), result.errors.end(),
            [](const InjectedError& x, const InjectedError& y) { return std::tie(x.row, x.col) < std::tie(y.row, y.col); });
  for (const auto& e : result.errors) {
    if (__builtin_add_overflow(result.corrupted(e.row, e.col), e.delta, &result.corrupted(e.row, e.col))) {
      throw CapacityError("injected delta overflows entry (" + std::to_string(e.row) + ", " +
                          std::to_string(e.col) + ")");
    }
  }
  return result;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, Value alpha, std::mt19937_64& rng) {
  if (alpha < 0) throw std::invalid_argument("alpha must be non-negative");
  Matrix m(rows, cols);
  std::uniform_int_distribution<Value> entry(-alpha, alpha);
  for (Value& v : m.data()) v = entry(rng);
  return m;
}

}  // namespace matcorrect

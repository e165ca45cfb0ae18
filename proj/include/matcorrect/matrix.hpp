#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace matcorrect {

/// Entry type of every matrix in the library.
using Value = std::int64_t;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when the magnitudes of an input would overflow `Value` during a run.
class CapacityError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/**
 * Dense row-major integer matrix.
 *
 * Indices are 0-based throughout the library. A default-constructed matrix is
 * empty (0 x 0); every other matrix has at least one row and one column.
 */
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Value fill = 0);
  Matrix(std::initializer_list<std::initializer_list<Value>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }
  bool square() const noexcept { return rows_ == cols_; }

  Value& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  Value operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  /// Bounds-checked access.
  Value at(std::size_t i, std::size_t j) const;

  std::span<Value> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<const Value> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }

  std::span<Value> data() noexcept { return data_; }
  std::span<const Value> data() const noexcept { return data_; }

  /// Largest absolute entry (0 for an empty matrix).
  Value max_abs() const noexcept;

  /// Number of nonzero entries.
  std::size_t nonzeros() const noexcept;

  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Value> data_;
};

/// Entry-wise a - b; shapes must agree.
Matrix difference(const Matrix& a, const Matrix& b);

std::string shape_string(const Matrix& m);

}  // namespace matcorrect

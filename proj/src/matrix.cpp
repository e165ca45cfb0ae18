#include "matcorrect/matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace matcorrect {

Matrix::Matrix(std::size_t rows, std::size_t cols, Value fill) : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("matrix dimensions must be positive");
  }
  data_.assign(rows * cols, fill);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Value>> rows) {
  if (rows.size() == 0 || rows.begin()->size() == 0) {
    throw DimensionError("matrix dimensions must be positive");
  }
  rows_ = rows.size();
  cols_ = rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw DimensionError("ragged matrix initializer");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

Value Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw std::out_of_range("matrix index (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") outside " + shape_string(*this));
  }
  return (*this)(i, j);
}

Value Matrix::max_abs() const noexcept {
  Value best = 0;
  for (Value v : data_) {
    best = std::max(best, v < 0 ? -v : v);
  }
  return best;
}

std::size_t Matrix::nonzeros() const noexcept {
  return static_cast<std::size_t>(std::count_if(data_.begin(), data_.end(), [](Value v) { return v != 0; }));
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      t(j, i) = (*this)(i, j);
    }
  }
  return t;
}

Matrix difference(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("difference of " + shape_string(a) + " and " + shape_string(b));
  }
  Matrix out = a;
  auto dst = out.data();
  auto src = b.data();
  for (std::size_t t = 0; t < dst.size(); ++t) {
    dst[t] -= src[t];
  }
  return out;
}

std::string shape_string(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace matcorrect

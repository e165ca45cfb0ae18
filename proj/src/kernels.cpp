#include "matcorrect/kernels.hpp"

#include <algorithm>
#include <cstdlib>

namespace matcorrect::kernels {
namespace {

inline Value magnitude(Value v) noexcept { return v < 0 ? -v : v; }

}  // namespace

Matrix product(const Matrix& x, const Matrix& y, OpCounter& ops) {
  if (x.cols() != y.rows()) {
    throw DimensionError("product of " + shape_string(x) + " and " + shape_string(y));
  }
  Matrix out(x.rows(), y.cols());
  Value peak = 0;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t t = 0; t < x.cols(); ++t) {
      const Value a = x(i, t);
      auto src = y.row(t);
      for (std::size_t j = 0; j < dst.size(); ++j) {
        const Value term = a * src[j];
        dst[j] += term;
        peak = std::max({peak, magnitude(term), magnitude(dst[j])});
      }
    }
  }
  const std::uint64_t steps = static_cast<std::uint64_t>(x.rows()) * x.cols() * y.cols();
  ops.count(steps, steps);
  ops.observe(peak);
  return out;
}

Matrix transposed_product(const Matrix& x, const Matrix& y, OpCounter& ops) {
  if (x.rows() != y.rows()) {
    throw DimensionError("transposed product of " + shape_string(x) + " and " + shape_string(y));
  }
  Matrix out(x.cols(), y.cols());
  Value peak = 0;
  for (std::size_t t = 0; t < x.rows(); ++t) {
    auto src = y.row(t);
    for (std::size_t l = 0; l < x.cols(); ++l) {
      const Value a = x(t, l);
      auto dst = out.row(l);
      for (std::size_t j = 0; j < dst.size(); ++j) {
        const Value term = a * src[j];
        dst[j] += term;
        peak = std::max({peak, magnitude(term), magnitude(dst[j])});
      }
    }
  }
  const std::uint64_t steps = static_cast<std::uint64_t>(x.rows()) * x.cols() * y.cols();
  ops.count(steps, steps);
  ops.observe(peak);
  return out;
}

Value dot(const Matrix& x, std::size_t i, const Matrix& y, std::size_t j, OpCounter& ops) {
  Value acc = 0;
  Value peak = 0;
  const auto lhs = x.row(i);
  for (std::size_t t = 0; t < lhs.size(); ++t) {
    const Value term = lhs[t] * y(t, j);
    acc += term;
    peak = std::max({peak, magnitude(term), magnitude(acc)});
  }
  ops.count(lhs.size(), lhs.size());
  ops.observe(peak);
  return acc;
}

}  // namespace matcorrect::kernels

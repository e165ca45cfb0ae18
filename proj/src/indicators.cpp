#include "matcorrect/indicators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "matcorrect/kernels.hpp"

namespace matcorrect {
namespace {

void require_square_triple(const Matrix& a, const Matrix& b, const Matrix& c, const Certificate& cert) {
  const std::size_t n = a.rows();
  auto ok = [n](const Matrix& m) { return m.rows() == n && m.cols() == n; };
  if (n == 0 || !ok(a) || !ok(b) || !ok(c)) {
    throw DimensionError("indicators need three n x n matrices, got A " + shape_string(a) + ", B " +
                         shape_string(b) + ", C " + shape_string(c));
  }
  if (cert.n != n) {
    throw DimensionError("certificate built for n=" + std::to_string(cert.n) + " but matrices have n=" +
                         std::to_string(n));
  }
}

// lhs -= rhs, counting one addition per entry.
void subtract_in_place(Matrix& lhs, const Matrix& rhs, OpCounter& ops) {
  auto dst = lhs.data();
  auto src = rhs.data();
  Value peak = 0;
  for (std::size_t t = 0; t < dst.size(); ++t) {
    dst[t] -= src[t];
    peak = std::max(peak, dst[t] < 0 ? -dst[t] : dst[t]);
  }
  ops.count(0, dst.size());
  ops.observe(peak);
}

}  // namespace

IndicatorState IndicatorState::from_matrix(IndicatorKind kind, Matrix values) {
  IndicatorState state;
  state.kind_ = kind;
  const std::size_t lines = kind == IndicatorKind::row ? values.rows() : values.cols();
  state.counts_.assign(lines, 0);
  for (std::size_t r = 0; r < values.rows(); ++r) {
    for (std::size_t c = 0; c < values.cols(); ++c) {
      if (values(r, c) != 0) {
        ++state.counts_[kind == IndicatorKind::row ? r : c];
      }
    }
  }
  for (std::size_t count : state.counts_) {
    if (count > 0) ++state.detected_count_;
  }
  state.values_ = std::move(values);
  return state;
}

std::vector<std::size_t> IndicatorState::detected_lines() const {
  std::vector<std::size_t> out;
  out.reserve(detected_count_);
  for (std::size_t line = 0; line < counts_.size(); ++line) {
    if (counts_[line] > 0) out.push_back(line);
  }
  return out;
}

void IndicatorState::adjust(std::size_t line, std::size_t l, Value delta) {
  if (delta == 0) return;
  Value& slot = entry(line, l);
  const bool was_zero = slot == 0;
  slot += delta;
  const bool is_zero = slot == 0;
  if (was_zero && !is_zero) {
    if (counts_[line]++ == 0) ++detected_count_;
  } else if (!was_zero && is_zero) {
    if (--counts_[line] == 0) --detected_count_;
  }
}

Matrix row_signature(const Matrix& a, const Matrix& b, const Certificate& cert, OpCounter& ops) {
  require_square_triple(a, b, a, cert);
  return kernels::product(a, kernels::product(b, cert.values, ops), ops);
}

Matrix col_signature(const Matrix& a, const Matrix& b, const Certificate& cert, OpCounter& ops) {
  require_square_triple(a, b, a, cert);
  return kernels::product(kernels::transposed_product(cert.values, a, ops), b, ops);
}

IndicatorState row_indicator_from(const Matrix& signature, const Matrix& c, const Certificate& cert, OpCounter& ops) {
  if (signature.rows() != c.rows() || signature.cols() != cert.width) {
    throw DimensionError("row signature " + shape_string(signature) + " does not match C " + shape_string(c));
  }
  Matrix ir = signature;
  subtract_in_place(ir, kernels::product(c, cert.values, ops), ops);
  return IndicatorState::from_matrix(IndicatorKind::row, std::move(ir));
}

IndicatorState col_indicator_from(const Matrix& signature, const Matrix& c, const Certificate& cert, OpCounter& ops) {
  if (signature.cols() != c.cols() || signature.rows() != cert.width) {
    throw DimensionError("column signature " + shape_string(signature) + " does not match C " + shape_string(c));
  }
  Matrix ic = signature;
  subtract_in_place(ic, kernels::transposed_product(cert.values, c, ops), ops);
  return IndicatorState::from_matrix(IndicatorKind::column, std::move(ic));
}

IndicatorState row_indicator(const Matrix& a, const Matrix& b, const Matrix& c, const Certificate& cert,
                             OpCounter& ops) {
  require_square_triple(a, b, c, cert);
  return row_indicator_from(row_signature(a, b, cert, ops), c, cert, ops);
}

IndicatorState col_indicator(const Matrix& a, const Matrix& b, const Matrix& c, const Certificate& cert,
                             OpCounter& ops) {
  require_square_triple(a, b, c, cert);
  return col_indicator_from(col_signature(a, b, cert, ops), c, cert, ops);
}

void apply_correction(std::size_t i, std::size_t j, Value x, const Certificate& cert, IndicatorState& row_state,
                      IndicatorState& col_state, OpCounter& ops) {
  if (row_state.kind() != IndicatorKind::row || col_state.kind() != IndicatorKind::column) {
    throw std::invalid_argument("apply_correction: indicator kinds swapped");
  }
  if (i >= cert.n || j >= cert.n || i >= row_state.lines() || j >= col_state.lines()) {
    throw std::out_of_range("apply_correction: entry (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") outside n=" + std::to_string(cert.n));
  }
  if (x == 0) return;
  const std::size_t m = cert.width;
  Value peak = 0;
  for (std::size_t l = 0; l < m; ++l) {
    const Value row_step = x * cert(j, l);
    const Value col_step = x * cert(i, l);
    row_state.adjust(i, l, -row_step);
    col_state.adjust(j, l, -col_step);
    const Value ir = row_state.values()(i, l);
    const Value ic = col_state.values()(l, j);
    peak = std::max({peak, row_step < 0 ? -row_step : row_step, col_step < 0 ? -col_step : col_step,
                     ir < 0 ? -ir : ir, ic < 0 ? -ic : ic});
  }
  ops.count(2 * m, 2 * m);
  ops.observe(peak);
}

}  // namespace matcorrect

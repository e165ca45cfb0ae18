#pragma once

#include <cstddef>
#include <vector>

#include "matcorrect/core_math.hpp"
#include "matcorrect/matrix.hpp"
#include "matcorrect/op_counter.hpp"

namespace matcorrect {

enum class IndicatorKind { row, column };

/**
 * A row indicator IR = (AB - C) V (n x m) or a column indicator
 * IC = V^T (AB - C) (m x n), with a per-line count of nonzero entries.
 *
 * A line is a row of IR or a column of IC; line i is "detected" iff its count
 * is positive. The detected set is always derived from the counters, never
 * cached separately.
 */
class IndicatorState {
 public:
  IndicatorState() = default;

  /// Wraps an already computed indicator matrix and counts its nonzeros.
  static IndicatorState from_matrix(IndicatorKind kind, Matrix values);

  IndicatorKind kind() const noexcept { return kind_; }
  const Matrix& values() const noexcept { return values_; }

  /// Number of lines (n).
  std::size_t lines() const noexcept { return counts_.size(); }
  std::size_t nonzeros_in_line(std::size_t line) const { return counts_.at(line); }
  bool detected(std::size_t line) const { return counts_.at(line) > 0; }

  /// Detected line indices in ascending order.
  std::vector<std::size_t> detected_lines() const;
  std::size_t detected_count() const noexcept { return detected_count_; }

  /// Adds `delta` to the entry at (line, l), keeping the counters in step.
  void adjust(std::size_t line, std::size_t l, Value delta);

  friend bool operator==(const IndicatorState&, const IndicatorState&) = default;

 private:
  Value& entry(std::size_t line, std::size_t l) noexcept {
    return kind_ == IndicatorKind::row ? values_(line, l) : values_(l, line);
  }

  IndicatorKind kind_ = IndicatorKind::row;
  Matrix values_;
  std::vector<std::size_t> counts_;
  std::size_t detected_count_ = 0;
};

/// A(BV), the part of the row indicator that depends only on A and B.
Matrix row_signature(const Matrix& a, const Matrix& b, const Certificate& cert, OpCounter& ops);

/// (V^T A)B, the column counterpart of row_signature.
Matrix col_signature(const Matrix& a, const Matrix& b, const Certificate& cert, OpCounter& ops);

/// IR = signature - CV for a signature from row_signature. Lets a caller that
/// rewrites C reuse A(BV) instead of recomputing it.
IndicatorState row_indicator_from(const Matrix& signature, const Matrix& c, const Certificate& cert, OpCounter& ops);

/// IC = signature - V^T C for a signature from col_signature.
IndicatorState col_indicator_from(const Matrix& signature, const Matrix& c, const Certificate& cert, OpCounter& ops);

/// IR = A(BV) - CV and S = its nonzero rows. Never forms AB.
IndicatorState row_indicator(const Matrix& a, const Matrix& b, const Matrix& c, const Certificate& cert,
                             OpCounter& ops);

/// IC = (V^T A)B - V^T C and T = its nonzero columns.
IndicatorState col_indicator(const Matrix& a, const Matrix& b, const Matrix& c, const Certificate& cert,
                             OpCounter& ops);

/**
 * Brings both indicators in line with C(i, j) being overwritten by (AB)(i, j),
 * where x = (AB)(i, j) - C(i, j) is taken before the write. Each touched
 * entry moves by -x * V: IR(i, l) -= x V(j, l) and IC(l, j) -= x V(i, l).
 *
 * x == 0 leaves both states untouched and costs nothing.
 */
void apply_correction(std::size_t i, std::size_t j, Value x, const Certificate& cert, IndicatorState& row_state,
                      IndicatorState& col_state, OpCounter& ops);

}  // namespace matcorrect

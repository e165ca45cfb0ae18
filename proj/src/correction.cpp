#include "matcorrect/correction.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "matcorrect/kernels.hpp"

namespace matcorrect {
namespace {

void require_square_triple(const Matrix& a, const Matrix& b, const Matrix& c) {
  const std::size_t n = a.rows();
  auto ok = [n](const Matrix& m) { return m.rows() == n && m.cols() == n; };
  if (n == 0 || !ok(a) || !ok(b) || !ok(c)) {
    throw DimensionError("expected three n x n matrices, got A " + shape_string(a) + ", B " + shape_string(b) +
                         ", C " + shape_string(c));
  }
}

OpCounter since(const OpCounter& now, const OpCounter& start) {
  OpCounter delta;
  delta.mults = now.mults - start.mults;
  delta.adds = now.adds - start.adds;
  delta.max_magnitude = now.max_magnitude;
  return delta;
}

CorrectionReport start_report(std::string algorithm, std::size_t n, std::size_t k, const Certificate& cert) {
  CorrectionReport report;
  report.algorithm = std::move(algorithm);
  report.n = n;
  report.k = k;
  report.certificate_width = cert.width;
  report.prime = cert.prime;
  return report;
}

// Writes `value` into C(i, j) and logs it when it differs from the old entry.
void overwrite(Matrix& c, std::size_t i, std::size_t j, Value value, Phase phase, CorrectionReport& report) {
  const Value old = c(i, j);
  if (old == value) return;
  report.corrected_entries.push_back({i, j, old, value, phase});
  c(i, j) = value;
}

// First line of `initial` still detected in `live`; both sweeps pick their
// next line this way, so ties always go to the smallest index.
std::optional<std::size_t> next_pick(const std::vector<std::size_t>& initial, const IndicatorState& live) {
  for (std::size_t line : initial) {
    if (live.detected(line)) return line;
  }
  return std::nullopt;
}

}  // namespace

std::string_view phase_name(Phase phase) {
  switch (phase) {
    case Phase::phase1:
      return "phase1";
    case Phase::row_sweep:
      return "phase2-row-sweep";
    case Phase::col_sweep:
      return "phase2-col-sweep";
    case Phase::baseline:
      return "baseline";
  }
  return "unknown";
}

Matrix oracle_product(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("oracle product of " + shape_string(a) + " and " + shape_string(b));
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Value acc = 0;
      for (std::size_t t = 0; t < a.cols(); ++t) {
        acc += a(i, t) * b(t, j);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

Value recompute_entry(const Matrix& a, const Matrix& b, std::size_t i, std::size_t j, OpCounter& ops) {
  if (i >= a.rows() || j >= b.cols()) {
    throw std::out_of_range("recompute_entry: (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
  }
  if (a.cols() != b.rows()) throw DimensionError("recompute_entry: inner dimensions differ");
  return kernels::dot(a, i, b, j, ops);
}

std::vector<Value> recompute_row(const Matrix& a, const Matrix& b, std::size_t i, OpCounter& ops) {
  if (i >= a.rows()) throw std::out_of_range("recompute_row: row " + std::to_string(i) + " out of range");
  if (a.cols() != b.rows()) throw DimensionError("recompute_row: inner dimensions differ");
  std::vector<Value> out(b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    out[j] = kernels::dot(a, i, b, j, ops);
  }
  return out;
}

std::vector<Value> recompute_column(const Matrix& a, const Matrix& b, std::size_t j, OpCounter& ops) {
  if (j >= b.cols()) throw std::out_of_range("recompute_column: column " + std::to_string(j) + " out of range");
  if (a.cols() != b.rows()) throw DimensionError("recompute_column: inner dimensions differ");
  std::vector<Value> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    out[i] = kernels::dot(a, i, b, j, ops);
  }
  return out;
}

CorrectionReport correct_baseline(const Matrix& a, const Matrix& b, Matrix& c, std::size_t k, OpCounter& ops) {
  require_square_triple(a, b, c);
  check_capacity(a, b, c);
  const std::size_t n = a.rows();
  const Certificate cert = build_certificate(n, certificate_width_for(k));
  CorrectionReport report = start_report("baseline", n, k, cert);

  const OpCounter at_start = ops;
  const IndicatorState row = row_indicator(a, b, c, cert, ops);
  const IndicatorState col = col_indicator(a, b, c, cert, ops);
  report.phase_ops.push_back({"indicators", since(ops, at_start)});

  const OpCounter at_recompute = ops;
  const std::vector<std::size_t> rows = row.detected_lines();
  const std::vector<std::size_t> cols = col.detected_lines();
  for (std::size_t i : rows) {
    const std::vector<Value> fresh = recompute_row(a, b, i, ops);
    for (std::size_t j = 0; j < n; ++j) overwrite(c, i, j, fresh[j], Phase::baseline, report);
  }
  // Entries in S x T were already rewritten by the row pass.
  for (std::size_t j : cols) {
    for (std::size_t i = 0; i < n; ++i) {
      if (row.detected(i)) continue;
      overwrite(c, i, j, recompute_entry(a, b, i, j, ops), Phase::baseline, report);
    }
  }
  report.rows_recomputed = rows.size();
  report.cols_recomputed = cols.size();
  report.phase_ops.push_back({"recompute", since(ops, at_recompute)});
  report.ops = ops;
  return report;
}

CorrectionReport correct_fast(const Matrix& a, const Matrix& b, Matrix& c, std::size_t k, OpCounter& ops,
                              CorrectionObserver* observer) {
  require_square_triple(a, b, c);
  check_capacity(a, b, c);
  const std::size_t n = a.rows();
  const Certificate cert = build_certificate(n, certificate_width_for(k));
  CorrectionReport report = start_report("fast", n, k, cert);

  // Phase 1: entries lying in a detected row and a detected column.
  const OpCounter at_phase1 = ops;
  const Matrix row_sig = row_signature(a, b, cert, ops);
  const Matrix col_sig = col_signature(a, b, cert, ops);
  const IndicatorState row0 = row_indicator_from(row_sig, c, cert, ops);
  const IndicatorState col0 = col_indicator_from(col_sig, c, cert, ops);
  const std::vector<std::size_t> s0 = row0.detected_lines();
  const std::vector<std::size_t> t0 = col0.detected_lines();
  for (std::size_t i : s0) {
    for (std::size_t j : t0) {
      overwrite(c, i, j, recompute_entry(a, b, i, j, ops), Phase::phase1, report);
    }
  }
  report.phase_ops.push_back({"phase1", since(ops, at_phase1)});

  // Phase 2. A and B are unchanged, so only the C-dependent halves of the
  // indicators are recomputed.
  const OpCounter at_phase2 = ops;
  IndicatorState row = row_indicator_from(row_sig, c, cert, ops);
  IndicatorState col = col_indicator_from(col_sig, c, cert, ops);
  if (observer) observer->on_phase2_start(row0, col0, row, col, c);

  auto update = [&](std::size_t i, std::size_t j, Value fresh, Phase phase) {
    const Value x = fresh - c(i, j);
    ops.count(0, 1);
    apply_correction(i, j, x, cert, row, col, ops);
    overwrite(c, i, j, fresh, phase, report);
    if (observer) observer->on_update(i, j, c, row, col);
  };

  while (auto picked = next_pick(s0, row)) {
    const std::size_t i = *picked;
    if (observer) observer->on_pick(Phase::row_sweep, i, c);
    const std::vector<Value> fresh_row = recompute_row(a, b, i, ops);
    ++report.rows_recomputed;
    std::vector<std::size_t> wrong_cols;
    for (std::size_t j = 0; j < n; ++j) {
      if (fresh_row[j] != c(i, j)) wrong_cols.push_back(j);
    }
    for (std::size_t j : wrong_cols) {
      const std::vector<Value> fresh_col = recompute_column(a, b, j, ops);
      ++report.cols_recomputed;
      for (std::size_t r = 0; r < n; ++r) update(r, j, fresh_col[r], Phase::row_sweep);
    }
    // A picked row is clean now and cannot be detected again; guard anyway.
    if (wrong_cols.empty()) break;
  }

  while (auto picked = next_pick(t0, col)) {
    const std::size_t j = *picked;
    if (observer) observer->on_pick(Phase::col_sweep, j, c);
    const std::vector<Value> fresh_col = recompute_column(a, b, j, ops);
    ++report.cols_recomputed;
    std::vector<std::size_t> wrong_rows;
    for (std::size_t i = 0; i < n; ++i) {
      if (fresh_col[i] != c(i, j)) wrong_rows.push_back(i);
    }
    for (std::size_t i : wrong_rows) {
      const std::vector<Value> fresh_row = recompute_row(a, b, i, ops);
      ++report.rows_recomputed;
      for (std::size_t col_idx = 0; col_idx < n; ++col_idx) update(i, col_idx, fresh_row[col_idx], Phase::col_sweep);
    }
    if (wrong_rows.empty()) break;
  }
  report.phase_ops.push_back({"phase2", since(ops, at_phase2)});
  report.ops = ops;

  if (row.detected_count() > 0 || col.detected_count() > 0) {
    throw PreconditionViolated("indicators still nonzero after correction (" + std::to_string(row.detected_count()) +
                                   " rows, " + std::to_string(col.detected_count()) +
                                   " columns); AB - C had more than k=" + std::to_string(k) + " nonzeros",
                               std::move(report));
  }
  return report;
}

bool freivalds_trial(const Matrix& a, const Matrix& b, const Matrix& c, std::span<const Value> v, OpCounter& ops) {
  require_square_triple(a, b, c);
  const std::size_t n = a.rows();
  if (v.size() != n) throw DimensionError("freivalds vector has wrong length");
  Matrix column(n, 1);
  std::copy(v.begin(), v.end(), column.data().begin());
  const Matrix bv = kernels::product(b, column, ops);
  const Matrix abv = kernels::product(a, bv, ops);
  const Matrix cv = kernels::product(c, column, ops);
  return abv == cv;
}

bool freivalds_verify(const Matrix& a, const Matrix& b, const Matrix& c, std::size_t trials, std::uint64_t seed,
                      OpCounter& ops) {
  require_square_triple(a, b, c);
  if (trials == 0) throw std::invalid_argument("freivalds_verify needs at least one trial");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<Value> v(a.rows());
  for (std::size_t t = 0; t < trials; ++t) {
    for (Value& entry : v) entry = bit(rng);
    if (!freivalds_trial(a, b, c, v, ops)) return false;
  }
  return true;
}

}  // namespace matcorrect

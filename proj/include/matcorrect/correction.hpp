#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "matcorrect/core_math.hpp"
#include "matcorrect/indicators.hpp"
#include "matcorrect/matrix.hpp"
#include "matcorrect/op_counter.hpp"

namespace matcorrect {

enum class Phase { phase1, row_sweep, col_sweep, baseline };

std::string_view phase_name(Phase phase);

struct CorrectedEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  Value old_value = 0;
  Value new_value = 0;
  Phase phase = Phase::baseline;

  friend bool operator==(const CorrectedEntry&, const CorrectedEntry&) = default;
};

struct PhaseOps {
  std::string name;
  OpCounter ops;
};

/// Audit trail of one correction run. Only entries whose value actually
/// changed are listed; each (row, col) appears at most once.
struct CorrectionReport {
  std::string algorithm;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t certificate_width = 0;
  std::uint64_t prime = 0;
  std::vector<CorrectedEntry> corrected_entries;
  std::size_t rows_recomputed = 0;
  std::size_t cols_recomputed = 0;
  OpCounter ops;
  std::vector<PhaseOps> phase_ops;
  std::optional<bool> verified;
};

/// Raised by correct_fast when indicators are still nonzero after both sweeps,
/// which can only happen when AB - C had more than k nonzeros.
class PreconditionViolated : public std::runtime_error {
 public:
  PreconditionViolated(const std::string& what, CorrectionReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const CorrectionReport& report() const noexcept { return report_; }

 private:
  CorrectionReport report_;
};

/// Schoolbook AB, uncounted. The ground truth everything else is checked against.
Matrix oracle_product(const Matrix& a, const Matrix& b);

Value recompute_entry(const Matrix& a, const Matrix& b, std::size_t i, std::size_t j, OpCounter& ops);
std::vector<Value> recompute_row(const Matrix& a, const Matrix& b, std::size_t i, OpCounter& ops);
std::vector<Value> recompute_column(const Matrix& a, const Matrix& b, std::size_t j, OpCounter& ops);

/// Hooks into correct_fast for instrumented runs. All callbacks default to no-ops.
class CorrectionObserver {
 public:
  virtual ~CorrectionObserver() = default;

  /// Called once, after the fresh indicators of phase 2 are computed.
  virtual void on_phase2_start(const IndicatorState& /*row0*/, const IndicatorState& /*col0*/,
                               const IndicatorState& /*row*/, const IndicatorState& /*col*/, const Matrix& /*c*/) {}

  /// A line has been picked from S0 n S (row sweep) or T0 n T (column sweep),
  /// before it is scanned.
  virtual void on_pick(Phase /*sweep*/, std::size_t /*line*/, const Matrix& /*c*/) {}

  /// apply_correction for (i, j) has run and C(i, j) has been overwritten.
  virtual void on_update(std::size_t /*i*/, std::size_t /*j*/, const Matrix& /*c*/, const IndicatorState& /*row*/,
                         const IndicatorState& /*col*/) {}
};

/**
 * O(kn^2) correction: one pair of indicators, then every entry of each
 * detected row and each detected column is recomputed. C is overwritten in
 * place and equals AB afterwards provided nnz(AB - C) <= k.
 */
CorrectionReport correct_baseline(const Matrix& a, const Matrix& b, Matrix& c, std::size_t k, OpCounter& ops);

/**
 * O(sqrt(k) n^2 + k^2 n) two-phase correction.
 *
 * Phase 1 recomputes every entry in S0 x T0. Phase 2 recomputes the
 * indicators and then sweeps rows of S0 n S (smallest first): each picked row
 * is scanned to find its wrong columns, and every entry of those columns is
 * rewritten while the indicators are maintained incrementally. The column
 * sweep over T0 n T is symmetric and runs after the row sweep.
 *
 * Throws CapacityError when the inputs are too large for 64-bit intermediates
 * and PreconditionViolated when the indicators are not zero at the end.
 */
CorrectionReport correct_fast(const Matrix& a, const Matrix& b, Matrix& c, std::size_t k, OpCounter& ops,
                              CorrectionObserver* observer = nullptr);

/// One Freivalds round with a caller-supplied vector: A(Bv) == Cv.
bool freivalds_trial(const Matrix& a, const Matrix& b, const Matrix& c, std::span<const Value> v, OpCounter& ops);

/// `trials` rounds with v drawn uniformly from {0,1}^n. Never false when AB = C;
/// true with probability at most 2^-trials otherwise.
bool freivalds_verify(const Matrix& a, const Matrix& b, const Matrix& c, std::size_t trials, std::uint64_t seed,
                      OpCounter& ops);

}  // namespace matcorrect

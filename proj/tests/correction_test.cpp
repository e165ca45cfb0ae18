#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "matcorrect/correction.hpp"
#include "matcorrect/injection.hpp"
#include "support.hpp"

using namespace matcorrect;
namespace t = matcorrect::testing;

namespace {

using Lines = std::vector<std::size_t>;

struct Instance {
  Matrix a, b, truth, c;
  std::vector<InjectedError> errors;
};

Instance make_instance(std::size_t n, Value alpha, const InjectionSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Instance inst;
  inst.a = random_matrix(n, n, alpha, rng);
  inst.b = random_matrix(n, n, alpha, rng);
  inst.truth = oracle_product(inst.a, inst.b);
  auto injection = inject_errors(inst.truth, spec);
  inst.c = std::move(injection.corrupted);
  inst.errors = std::move(injection.errors);
  return inst;
}

std::set<std::pair<std::size_t, std::size_t>> positions(const std::vector<CorrectedEntry>& entries) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : entries) out.emplace(e.row, e.col);
  return out;
}

std::set<std::pair<std::size_t, std::size_t>> positions(const std::vector<InjectedError>& errors) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : errors) out.emplace(e.row, e.col);
  return out;
}

}  // namespace

TEST(OracleProduct, Examples) {
  const Matrix id = Matrix::identity(3);
  EXPECT_EQ(oracle_product(id, id), id);
  EXPECT_EQ(oracle_product(Matrix{{1, 2}, {3, 4}}, Matrix{{0, 1}, {1, 0}}), (Matrix{{2, 1}, {4, 3}}));
  EXPECT_EQ(oracle_product(Matrix{{1, 2}, {3, 4}}, Matrix(2, 2)), Matrix(2, 2));
  EXPECT_THROW(oracle_product(Matrix(2, 3), Matrix(2, 3)), DimensionError);
}

TEST(Recompute, Examples) {
  OpCounter ops;
  const Matrix id = Matrix::identity(2);
  EXPECT_EQ(recompute_entry(id, id, 0, 0, ops), 1);
  EXPECT_EQ(ops.mults, 2U);
  EXPECT_EQ(recompute_row(Matrix{{1, 2}, {3, 4}}, id, 1, ops), (std::vector<Value>{3, 4}));
  EXPECT_EQ(recompute_column(Matrix{{1, 2}, {3, 4}}, Matrix{{0, 1}, {1, 0}}, 0, ops), (std::vector<Value>{2, 4}));
  EXPECT_EQ(ops.mults, 2U + 4U + 4U);
}

TEST(Recompute, RejectsOutOfRange) {
  OpCounter ops;
  const Matrix id = Matrix::identity(2);
  EXPECT_THROW(recompute_entry(id, id, 2, 0, ops), std::out_of_range);
  EXPECT_THROW(recompute_row(id, id, 2, ops), std::out_of_range);
  EXPECT_THROW(recompute_column(id, id, 5, ops), std::out_of_range);
}

TEST(Baseline, LeavesCorrectProductAlone) {
  const Instance inst = make_instance(10, 20, InjectionSpec{}, 1);
  Matrix c = inst.c;
  OpCounter ops;
  const auto report = correct_baseline(inst.a, inst.b, c, 7, ops);
  EXPECT_EQ(c, inst.truth);
  EXPECT_TRUE(report.corrected_entries.empty());
  EXPECT_EQ(report.rows_recomputed, 0U);
  EXPECT_EQ(report.cols_recomputed, 0U);
}

TEST(Baseline, SingleErrorRecomputesItsRowAndColumn) {
  InjectionSpec spec;
  spec.pattern = InjectionPattern::custom;
  spec.custom = {{1, 2, 9}};
  const Instance inst = make_instance(4, 10, spec, 2);
  Matrix c = inst.c;
  OpCounter ops;
  const auto report = correct_baseline(inst.a, inst.b, c, 4, ops);
  EXPECT_EQ(c, inst.truth);
  EXPECT_EQ(report.rows_recomputed, 1U);
  EXPECT_EQ(report.cols_recomputed, 1U);
  ASSERT_EQ(report.corrected_entries.size(), 1U);
  EXPECT_EQ(report.corrected_entries[0], (CorrectedEntry{1, 2, inst.truth(1, 2) + 9, inst.truth(1, 2), Phase::baseline}));
}

// Errors crowded into one row and one column: every line holding an error is
// recomputed in full.
TEST(Baseline, CrossInstanceRecomputesEveryCorruptedLine) {
  InjectionSpec spec;
  spec.k = 8;
  spec.pattern = InjectionPattern::cross;
  spec.seed = 17;
  const Instance inst = make_instance(16, 30, spec, 3);
  Matrix c = inst.c;
  OpCounter ops;
  const auto report = correct_baseline(inst.a, inst.b, c, 8, ops);
  EXPECT_EQ(c, inst.truth);
  // Four rows holding a single error each are always detected.
  EXPECT_GE(report.rows_recomputed, 4U);
  EXPECT_EQ(positions(report.corrected_entries), positions(inst.errors));
}

TEST(Baseline, CrossInstanceCostGrowsLikeKTimesNSquared) {
  const std::size_t k = 16;
  std::vector<double> per_kn2;
  for (std::size_t n : {64U, 128U, 256U}) {
    InjectionSpec spec;
    spec.k = k;
    spec.pattern = InjectionPattern::cross;
    spec.seed = 5;
    const Instance inst = make_instance(n, 10, spec, 4);
    Matrix c = inst.c;
    OpCounter ops;
    correct_baseline(inst.a, inst.b, c, k, ops);
    ASSERT_EQ(c, inst.truth);
    per_kn2.push_back(static_cast<double>(ops.total()) / static_cast<double>(k * n * n));
  }
  for (double r : per_kn2) EXPECT_NEAR(r, per_kn2.front(), per_kn2.front() * 0.25);
}

TEST(Fast, LeavesCorrectProductAlone) {
  const Instance inst = make_instance(12, 20, InjectionSpec{}, 6);
  Matrix c = inst.c;
  OpCounter ops;
  const auto report = correct_fast(inst.a, inst.b, c, 9, ops);
  EXPECT_EQ(c, inst.truth);
  EXPECT_TRUE(report.corrected_entries.empty());
  EXPECT_EQ(report.rows_recomputed + report.cols_recomputed, 0U);
}

TEST(Fast, RandomInstanceMatchesOracle) {
  InjectionSpec spec;
  spec.k = 25;
  spec.seed = 8;
  const Instance inst = make_instance(32, 100, spec, 7);
  Matrix c = inst.c;
  OpCounter ops;
  const auto report = correct_fast(inst.a, inst.b, c, 25, ops);
  EXPECT_EQ(c, inst.truth);
  EXPECT_EQ(positions(report.corrected_entries), positions(inst.errors));
}

namespace {

struct PickRecorder : CorrectionObserver {
  std::vector<std::size_t> row_picks;
  std::vector<std::size_t> col_picks;
  Lines s0, t0, s_at_start;
  std::vector<Lines> s0_and_s_before_pick;
  const IndicatorState* live_row = nullptr;
  const IndicatorState* s0_state = nullptr;

  void on_phase2_start(const IndicatorState& row0, const IndicatorState& col0, const IndicatorState& row,
                       const IndicatorState&, const Matrix&) override {
    s0 = row0.detected_lines();
    t0 = col0.detected_lines();
    s_at_start = row.detected_lines();
    live_row = &row;
  }
  void on_pick(Phase sweep, std::size_t line, const Matrix&) override {
    if (sweep == Phase::row_sweep) {
      Lines both;
      for (std::size_t i : s0)
        if (live_row->detected(i)) both.push_back(i);
      s0_and_s_before_pick.push_back(both);
      row_picks.push_back(line);
    } else {
      col_picks.push_back(line);
    }
  }
};

}  // namespace

// The six-by-six walkthrough: one row and two columns carry five errors each
// with values chosen so the width-4 certificate cannot see them.
TEST(Fast, SixBySixWalkthrough) {
  const std::size_t n = 6;
  const std::size_t k = 16;
  std::mt19937_64 rng(42);
  const Matrix a = random_matrix(n, n, 9, rng);
  const Matrix b = random_matrix(n, n, 9, rng);
  const Matrix truth = oracle_product(a, b);
  // C - AB, 0-based. Row 1 and columns 1, 3 each lie in the kernel of V^T.
  const std::vector<InjectedError> errors = {
      {0, 3, 4},  {1, 0, 4}, {1, 1, -2}, {1, 2, -4}, {1, 3, -2}, {1, 4, 4},  {2, 1, 1},
      {2, 3, -4}, {3, 1, 2}, {3, 3, -2}, {4, 1, 1},  {4, 3, 4},  {5, 1, -2},
  };
  InjectionSpec spec;
  spec.pattern = InjectionPattern::custom;
  spec.custom = errors;
  Matrix c = inject_errors(truth, spec).corrupted;
  ASSERT_EQ(build_certificate(n, certificate_width_for(k)).prime, 7U);

  PickRecorder rec;
  OpCounter ops;
  const auto report = correct_fast(a, b, c, k, ops, &rec);
  EXPECT_EQ(c, truth);
  EXPECT_EQ(rec.s0, (Lines{0, 2, 3, 4, 5}));
  EXPECT_EQ(rec.t0, (Lines{0, 2, 4}));
  EXPECT_EQ(rec.s_at_start, (Lines{0, 2, 3, 4, 5}));
  // Row 0 exposes column 3; once column 3 is fixed row 2 exposes column 1.
  EXPECT_EQ(rec.row_picks, (Lines{0, 2}));
  ASSERT_EQ(rec.s0_and_s_before_pick.size(), 2U);
  EXPECT_EQ(rec.s0_and_s_before_pick[0], (Lines{0, 2, 3, 4, 5}));
  EXPECT_EQ(rec.s0_and_s_before_pick[1], (Lines{2, 3, 4, 5}));
  // Column 0 then exposes row 1, which clears everything left.
  EXPECT_EQ(rec.col_picks, (Lines{0}));

  std::size_t phase1 = 0, row_sweep = 0, col_sweep = 0;
  for (const auto& e : report.corrected_entries) {
    if (e.phase == Phase::phase1) ++phase1;
    if (e.phase == Phase::row_sweep) ++row_sweep;
    if (e.phase == Phase::col_sweep) ++col_sweep;
  }
  EXPECT_EQ(phase1, 0U);
  EXPECT_EQ(row_sweep, 10U);
  EXPECT_EQ(col_sweep, 3U);
  EXPECT_EQ(report.corrected_entries.size(), errors.size());
}

namespace {

// Checks the indicators after every update and the residual row weight at
// every row pick.
struct Auditor : CorrectionObserver {
  const Matrix* a;
  const Matrix* b;
  const Matrix* truth;
  Certificate cert;
  std::size_t updates = 0;
  std::size_t max_residual = 0;
  bool indicators_ok = true;

  void on_update(std::size_t, std::size_t, const Matrix& c, const IndicatorState& row,
                 const IndicatorState& col) override {
    ++updates;
    indicators_ok = indicators_ok && row.values() == t::scratch_row_indicator(*a, *b, c, cert.values) &&
                    col.values() == t::scratch_col_indicator(*a, *b, c, cert.values);
  }
  void on_pick(Phase sweep, std::size_t line, const Matrix& c) override {
    std::size_t residual = 0;
    for (std::size_t x = 0; x < c.rows(); ++x) {
      const bool wrong = sweep == Phase::row_sweep ? c(line, x) != (*truth)(line, x) : c(x, line) != (*truth)(x, line);
      residual += wrong ? 1 : 0;
    }
    max_residual = std::max(max_residual, residual);
  }
};

}  // namespace

TEST(Fast, MaintainedIndicatorsAndPickedLinesStaySparse) {
  std::mt19937_64 rng(314);
  std::size_t total_updates = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 8 + rng() % 9;
    const std::size_t k = 8 + rng() % 18;
    Instance inst;
    inst.a = random_matrix(n, n, 10, rng);
    inst.b = random_matrix(n, n, 10, rng);
    inst.truth = oracle_product(inst.a, inst.b);
    InjectionSpec spec;
    spec.pattern = InjectionPattern::custom;
    spec.custom = t::hidden_cross(n, k, rng);
    inst.c = inject_errors(inst.truth, spec).corrupted;

    Auditor audit;
    audit.a = &inst.a;
    audit.b = &inst.b;
    audit.truth = &inst.truth;
    audit.cert = build_certificate(n, certificate_width_for(k));
    OpCounter ops;
    Matrix c = inst.c;
    const auto report = correct_fast(inst.a, inst.b, c, k, ops, &audit);
    ASSERT_EQ(c, inst.truth);
    ASSERT_TRUE(audit.indicators_ok);
    ASSERT_GT(audit.updates, 0U);
    ASSERT_LE(audit.max_residual, certificate_width_for(k));
    ASSERT_LE(report.rows_recomputed, n);
    ASSERT_LE(report.cols_recomputed, n);
    total_updates += audit.updates;
  }
  EXPECT_GT(total_updates, 0U);
}

TEST(Fast, ExcessErrorsAreReportedNotHidden) {
  // k = 1 gives a width-1 certificate, i.e. plain row and column sums.
  const Matrix id = Matrix::identity(3);
  Matrix c = id;
  const std::vector<InjectedError> errors = {{0, 0, 1}, {0, 1, -2}, {0, 2, 1}, {1, 0, 1},
                                             {1, 2, 1}, {2, 1, 2},  {2, 2, -2}};
  for (const auto& e : errors) c(e.row, e.col) += e.delta;
  OpCounter ops;
  try {
    correct_fast(id, id, c, 1, ops);
    FAIL() << "expected PreconditionViolated";
  } catch (const PreconditionViolated& e) {
    EXPECT_FALSE(e.report().corrected_entries.empty());
  }
  EXPECT_NE(c, id);
}

TEST(Correction, RejectsOversizedInput) {
  Matrix big = Matrix::identity(8);
  big(0, 0) = Value{1} << 40;
  Matrix c = big;
  OpCounter ops;
  EXPECT_THROW(correct_fast(big, big, c, 1, ops), CapacityError);
  EXPECT_THROW(correct_baseline(big, big, c, 1, ops), CapacityError);
}

TEST(Correction, BothAlgorithmsMatchOracleOnRandomInstances) {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 2 + rng() % 30;
    const std::size_t k = rng() % (2 * n);
    InjectionSpec spec;
    spec.k = std::min(k, n * n);
    spec.seed = rng();
    spec.pattern = static_cast<InjectionPattern>(rng() % 3);
    if (spec.pattern == InjectionPattern::cross && spec.k / 2 > n - 1) spec.pattern = InjectionPattern::uniform;
    const Instance inst = make_instance(n, static_cast<Value>(1 + rng() % 100), spec, rng());
    for (bool fast : {false, true}) {
      Matrix c = inst.c;
      OpCounter ops;
      const auto report = fast ? correct_fast(inst.a, inst.b, c, k, ops) : correct_baseline(inst.a, inst.b, c, k, ops);
      ASSERT_EQ(c, inst.truth) << "trial " << trial << (fast ? " fast" : " baseline");
      ASSERT_EQ(positions(report.corrected_entries).size(), report.corrected_entries.size());
      ASSERT_EQ(positions(report.corrected_entries), positions(inst.errors));
    }
  }
}

TEST(Freivalds, NeverRejectsEqualProducts) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const Matrix a = random_matrix(n, n, 50, rng);
    const Matrix b = random_matrix(n, n, 50, rng);
    OpCounter ops;
    ASSERT_TRUE(freivalds_verify(a, b, oracle_product(a, b), 10, rng(), ops));
  }
}

TEST(Freivalds, VectorHittingTheErrorColumnRejects) {
  const Matrix id = Matrix::identity(2);
  Matrix c = id;
  c(0, 1) = 5;
  OpCounter ops;
  const std::vector<Value> hit{0, 1};
  const std::vector<Value> miss{1, 0};
  EXPECT_FALSE(freivalds_trial(id, id, c, hit, ops));
  EXPECT_TRUE(freivalds_trial(id, id, c, miss, ops));
  EXPECT_THROW(freivalds_trial(id, id, c, std::vector<Value>{1}, ops), DimensionError);
}

TEST(Freivalds, SingleErrorCaughtWithThirtyTrials) {
  std::mt19937_64 rng(16);
  const std::size_t n = 16;
  const Matrix a = random_matrix(n, n, 20, rng);
  const Matrix b = random_matrix(n, n, 20, rng);
  Matrix c = oracle_product(a, b);
  c(5, 11) += 1;
  int accepted = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    OpCounter ops;
    accepted += freivalds_verify(a, b, c, 30, seed, ops) ? 1 : 0;
  }
  EXPECT_LE(accepted, 1);
}

TEST(Freivalds, RejectsZeroTrials) {
  const Matrix id = Matrix::identity(2);
  OpCounter ops;
  EXPECT_THROW(freivalds_verify(id, id, id, 0, 1, ops), std::invalid_argument);
}

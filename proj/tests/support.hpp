#pragma once

// Test-only oracles. Nothing here calls into the indicator or correction code
// paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "matcorrect/core_math.hpp"
#include "matcorrect/injection.hpp"
#include "matcorrect/matrix.hpp"

namespace matcorrect::testing {

inline bool is_prime_by_trial_division(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

// i^e mod p by e repeated multiplications.
inline std::uint64_t naive_power_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  for (std::uint64_t t = 0; t < e; ++t) r = r * (base % p) % p;
  return r;
}

inline Matrix naive_product(const Matrix& x, const Matrix& y) {
  Matrix out(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < y.cols(); ++j) {
      Value acc = 0;
      for (std::size_t t = 0; t < x.cols(); ++t) acc += x(i, t) * y(t, j);
      out(i, j) = acc;
    }
  return out;
}

// (AB - C) V and V^T (AB - C), formed the slow way.
inline Matrix scratch_row_indicator(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& v) {
  Matrix m = naive_product(a, b);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= c(i, j);
  return naive_product(m, v);
}

inline Matrix scratch_col_indicator(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& v) {
  Matrix m = naive_product(a, b);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= c(i, j);
  return naive_product(v.transposed(), m);
}

// Determinant mod p of a square matrix by Gaussian elimination over Z/pZ.
inline std::uint64_t det_mod_by_elimination(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
  const std::size_t n = a.size();
  std::uint64_t det = 1;
  auto inv = [p](std::uint64_t x) { return naive_power_mod(x, p - 2, p); };
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] % p == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = (p - det) % p;
    }
    det = det * (a[col][col] % p) % p;
    const std::uint64_t pinv = inv(a[col][col] % p);
    for (std::size_t r = col + 1; r < n; ++r) {
      const std::uint64_t factor = a[r][col] % p * pinv % p;
      for (std::size_t c = col; c < n; ++c) {
        a[r][c] = (a[r][c] % p + p - factor * (a[col][c] % p) % p) % p;
      }
    }
  }
  return det;
}

// Exact integer determinant (Bareiss). Fine for the small minors used here.
inline Value exact_det(std::vector<std::vector<Value>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Value sign = 1;
  Value prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Integer weights u (all nonzero) on the certificate rows `points` with
/// sum_t u_t V(points[t], l) = 0 for every column l. Needs points.size() ==
/// width + 1. The weights are signed maximal minors (Cramer), and each minor is
/// a Vandermonde determinant mod p, hence nonzero.
inline std::vector<Value> cancelling_weights(const Certificate& cert, const std::vector<std::size_t>& points) {
  const std::size_t m = cert.width;
  std::vector<Value> u(points.size());
  Value g = 0;
  for (std::size_t t = 0; t < points.size(); ++t) {
    std::vector<std::vector<Value>> minor;
    for (std::size_t s = 0; s < points.size(); ++s) {
      if (s == t) continue;
      std::vector<Value> row(m);
      for (std::size_t l = 0; l < m; ++l) row[l] = cert(points[s], l);
      minor.push_back(row);
    }
    u[t] = (t % 2 == 0 ? 1 : -1) * exact_det(minor);
    g = std::gcd(g, u[t]);
  }
  for (Value& x : u) x /= g;
  return u;
}

/**
 * Custom error list with one row and one column that the width-m certificate
 * cannot see: each carries m + 1 errors whose weighted sum vanishes. The row
 * and column do not share a position. Uses 2(m + 1) errors, so k must allow it.
 */
inline std::vector<InjectedError> hidden_cross(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  const Certificate cert = build_certificate(n, certificate_width_for(k));
  const std::size_t m = cert.width;
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  // idx[0] = hidden row, idx[1] = hidden column; supports avoid both.
  const std::size_t r = idx[0];
  const std::size_t c = idx[1];
  std::vector<std::size_t> row_support(idx.begin() + 2, idx.begin() + 2 + static_cast<long>(m + 1));
  std::shuffle(idx.begin() + 2, idx.end(), rng);
  std::vector<std::size_t> col_support(idx.begin() + 2, idx.begin() + 2 + static_cast<long>(m + 1));
  std::sort(row_support.begin(), row_support.end());
  std::sort(col_support.begin(), col_support.end());
  std::uniform_int_distribution<Value> scale_pick(1, 3);
  const Value row_scale = scale_pick(rng) * (rng() % 2 ? 1 : -1);
  const Value col_scale = scale_pick(rng) * (rng() % 2 ? 1 : -1);
  std::vector<InjectedError> out;
  const auto ru = cancelling_weights(cert, row_support);
  for (std::size_t t = 0; t < row_support.size(); ++t) out.push_back({r, row_support[t], row_scale * ru[t]});
  const auto cu = cancelling_weights(cert, col_support);
  for (std::size_t t = 0; t < col_support.size(); ++t) out.push_back({col_support[t], c, col_scale * cu[t]});
  return out;
}

}  // namespace matcorrect::testing

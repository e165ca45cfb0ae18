#include "matcorrect/core_math.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace matcorrect {

std::uint64_t smallest_prime_above(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("smallest_prime_above requires n >= 1");
  }
  const std::size_t limit = 2 * n + 2;
  std::vector<bool> composite(limit + 1, false);
  for (std::size_t q = 2; q * q <= limit; ++q) {
    if (composite[q]) continue;
    for (std::size_t r = q * q; r <= limit; r += q) {
      composite[r] = true;
    }
  }
  for (std::size_t candidate = n + 1; candidate <= limit; ++candidate) {
    if (!composite[candidate]) {
      return candidate;
    }
  }
  // Unreachable: Bertrand's postulate puts a prime in (n, 2n] for n >= 1.
  throw std::logic_error("no prime found in (n, 2n + 2]");
}

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;  // keeps residue products inside 64 bits

}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  if (p == 0 || p >= kMaxModulus) throw std::invalid_argument("pow_mod: modulus must be in [1, 2^32)");
  std::uint64_t result = 1 % p;
  std::uint64_t b = base % p;
  while (exp > 0) {
    if (exp & 1U) result = result * b % p;
    b = b * b % p;
    exp >>= 1U;
  }
  return result;
}

std::size_t certificate_width_for(std::size_t k) {
  if (k <= 1) return 1;
  auto m = static_cast<std::size_t>(std::sqrt(static_cast<double>(k)));
  while (m * m < k) ++m;
  while (m > 1 && (m - 1) * (m - 1) >= k) --m;
  return m;
}

Certificate build_certificate(std::size_t n, std::size_t width) {
  if (n == 0 || width == 0) {
    throw std::invalid_argument("certificate needs n >= 1 and width >= 1");
  }
  Certificate cert;
  cert.prime = smallest_prime_above(n);
  cert.width = width;
  cert.n = n;
  cert.values = Matrix(n, width);
  const std::uint64_t p = cert.prime;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t point = (i + 1) % p;
    std::uint64_t power = 1;
    cert.values(i, 0) = 1;
    for (std::size_t l = 1; l < width; ++l) {
      power = power * point % p;
      cert.values(i, l) = static_cast<Value>(power);
    }
  }
  return cert;
}

std::uint64_t vandermonde_det_mod(std::span<const std::uint64_t> xs, std::uint64_t p) {
  if (p < 2 || p >= kMaxModulus) {
    throw std::invalid_argument("vandermonde_det_mod: modulus must be in [2, 2^32)");
  }
  std::vector<std::uint64_t> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("vandermonde_det_mod: evaluation points are not distinct");
  }
  if (!sorted.empty() && sorted.back() >= p) {
    throw std::invalid_argument("vandermonde_det_mod: point " + std::to_string(sorted.back()) +
                                " not reduced mod " + std::to_string(p));
  }
  std::uint64_t det = 1;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const std::uint64_t diff = (xs[j] + p - xs[i]) % p;
      det = det * diff % p;
    }
  }
  return det;
}

std::optional<Value> magnitude_bound(Value alpha, std::size_t n) {
  if (alpha < 0) alpha = -alpha;
  Value bound = 4;
  const Value dim = static_cast<Value>(n);
  for (Value factor : {alpha, alpha, dim, dim, dim}) {
    if (__builtin_mul_overflow(bound, factor, &bound)) {
      return std::nullopt;
    }
  }
  return bound;
}

Value check_capacity(const Matrix& a, const Matrix& b, const Matrix& c) {
  const Value alpha = std::max({a.max_abs(), b.max_abs(), c.max_abs()});
  const std::size_t n = std::max({a.rows(), a.cols(), b.cols()});
  auto bound = magnitude_bound(alpha, n);
  if (!bound) {
    throw CapacityError("4*alpha^2*n^3 exceeds 64-bit range (alpha=" + std::to_string(alpha) +
                        ", n=" + std::to_string(n) + ")");
  }
  return *bound;
}

}  // namespace matcorrect

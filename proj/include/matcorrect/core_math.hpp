#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "matcorrect/matrix.hpp"

namespace matcorrect {

/// Smallest prime strictly greater than `n`, found by sieving [2, 2n + 2].
/// For n >= 2 the result is below 2n.
std::uint64_t smallest_prime_above(std::size_t n);

/**
 * An m-certificate: the n x m matrix V with V(i, j) = (i + 1)^j mod p, where
 * p is the smallest prime above n. Row i therefore stands for the evaluation
 * point i + 1, which is a nonzero residue because n < p.
 *
 * Any row u of an integer matrix with between 1 and m nonzeros satisfies
 * uV != 0, since the rows of V indexed by the support of u form an invertible
 * Vandermonde matrix.
 */
struct Certificate {
  std::uint64_t prime = 0;
  std::size_t width = 0;  // m
  std::size_t n = 0;
  Matrix values;          // n x m, entries in [1, p - 1]

  Value operator()(std::size_t i, std::size_t l) const noexcept { return values(i, l); }
};

/// Builds V row by row with m - 1 modular multiplications per row.
Certificate build_certificate(std::size_t n, std::size_t width);

/// Certificate width used for an error bound k: max(1, ceil(sqrt(k))).
std::size_t certificate_width_for(std::size_t k);

/// prod_{i<j} (xs[j] - xs[i]) mod p. Throws std::invalid_argument when the
/// residues are not distinct or not in [0, p).
std::uint64_t vandermonde_det_mod(std::span<const std::uint64_t> xs, std::uint64_t p);

/// base^exp mod p.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

/// 4 * alpha^2 * n^3, or nullopt when that does not fit in `Value`.
std::optional<Value> magnitude_bound(Value alpha, std::size_t n);

/// Throws CapacityError unless 4 * alpha^2 * n^3 fits in `Value`, where alpha is
/// the largest absolute entry of a, b and c and n is their dimension.
/// Returns the bound.
Value check_capacity(const Matrix& a, const Matrix& b, const Matrix& c);

}  // namespace matcorrect

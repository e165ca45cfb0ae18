#pragma once

#include <cstdint>

#include "matcorrect/matrix.hpp"

namespace matcorrect {

/**
 * Tally of the integer multiplications and additions performed by the counted
 * kernels, plus the largest magnitude any product or partial sum reached.
 *
 * Counts are exact and deterministic: every kernel adds the closed-form number
 * of operations it executes, so two runs on the same input agree bit for bit.
 */
struct OpCounter {
  std::uint64_t mults = 0;
  std::uint64_t adds = 0;
  Value max_magnitude = 0;

  std::uint64_t total() const noexcept { return mults + adds; }

  void count(std::uint64_t multiplications, std::uint64_t additions) noexcept {
    mults += multiplications;
    adds += additions;
  }

  void observe(Value magnitude) noexcept {
    if (magnitude > max_magnitude) {
      max_magnitude = magnitude;
    }
  }

  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

}  // namespace matcorrect

#pragma once

#include "matcorrect/matrix.hpp"
#include "matcorrect/op_counter.hpp"

// Counted schoolbook kernels. Each inner step is one multiplication and one
// addition into an accumulator that starts at zero.
namespace matcorrect::kernels {

/// x * y.
Matrix product(const Matrix& x, const Matrix& y, OpCounter& ops);

/// transpose(x) * y, without materialising the transpose.
Matrix transposed_product(const Matrix& x, const Matrix& y, OpCounter& ops);

/// Row i of x times column j of y.
Value dot(const Matrix& x, std::size_t i, const Matrix& y, std::size_t j, OpCounter& ops);

}  // namespace matcorrect::kernels

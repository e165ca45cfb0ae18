#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "matcorrect/matrix.hpp"

namespace matcorrect {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads "rows cols\n" followed by `rows` lines of `cols` signed decimals.
/// Throws ParseError for a malformed header, a wrong entry count, a
/// non-integer token, or a value outside the 64-bit range.
Matrix parse_matrix(std::istream& in);
Matrix parse_matrix(const std::string& text);

void write_matrix(std::ostream& out, const Matrix& m);
std::string write_matrix(const Matrix& m);

Matrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const Matrix& m);

}  // namespace matcorrect

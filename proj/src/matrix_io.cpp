#include "matcorrect/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace matcorrect {
namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

template <typename T>
T parse_number(const std::string& token, std::size_t line_no, const char* what) {
  T value{};
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what + " '" + token + "' exceeds 64-bit capacity");
  }
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what + " '" + token + "' is not an integer");
  }
  return value;
}

}  // namespace

Matrix parse_matrix(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("missing header line");
  const auto header = split_tokens(line);
  if (header.size() != 2) throw ParseError("header must be 'rows cols'");
  const auto rows = parse_number<std::size_t>(header[0], 1, "row count");
  const auto cols = parse_number<std::size_t>(header[1], 1, "column count");
  if (rows == 0 || cols == 0) throw ParseError("header dimensions must be positive");

  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!std::getline(in, line)) {
      throw ParseError("expected " + std::to_string(rows) + " rows, found " + std::to_string(i));
    }
    const auto tokens = split_tokens(line);
    if (tokens.size() != cols) {
      throw ParseError("line " + std::to_string(i + 2) + ": expected " + std::to_string(cols) + " entries, found " +
                       std::to_string(tokens.size()));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const auto v = parse_number<Value>(tokens[j], i + 2, "entry");
      // |min| has no positive counterpart, so it would break max_abs.
      if (v == std::numeric_limits<Value>::min()) {
        throw ParseError("line " + std::to_string(i + 2) + ": entry '" + tokens[j] + "' exceeds 64-bit capacity");
      }
      m(i, j) = v;
    }
  }
  while (std::getline(in, line)) {
    if (!split_tokens(line).empty()) throw ParseError("trailing data after " + std::to_string(rows) + " rows");
  }
  return m;
}

Matrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

void write_matrix(std::ostream& out, const Matrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto row = m.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out << ' ';
      out << row[j];
    }
    out << '\n';
  }
}

std::string write_matrix(const Matrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return parse_matrix(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_matrix_file(const std::string& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_matrix(out, m);
}

}  // namespace matcorrect

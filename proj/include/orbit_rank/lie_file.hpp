#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbit_rank/lie_algebra.hpp"

namespace orbit_rank {

/// `.lie` syntax error with 1-based line and column.
class LieSyntaxError : public LieError {
 public:
  LieSyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : LieError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

struct LieFileBracket {
  std::string left;
  std::string right;
  std::vector<std::pair<Rat, std::string>> terms;
};

/// Parsed `.lie` file before the Jacobi check.
struct LieFile {
  std::size_t version = 1;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<LieFileBracket> brackets;
};

/// Grammar (whitespace-separated tokens, `#` comments, blank lines ignored):
///   lie 1
///   dim <n>
///   basis <name_1> ... <name_n>
///   [A,B] = <c1> <N1> + <c2> <N2> ...
/// Coefficients are integers or p/q. Omitted brackets are zero.
LieFile parse_lie_file(std::string_view text);

BracketTable to_bracket_table(const LieFile& file);

/// parse_lie_file followed by validate().
LieAlgebra load_lie_algebra(std::string_view text);

/// Canonical `.lie` text: brackets in (j, k) order, j < k, terms in basis
/// order, rationals in lowest terms.
std::string render_lie_file(const LieAlgebra& L);

}  // namespace orbit_rank

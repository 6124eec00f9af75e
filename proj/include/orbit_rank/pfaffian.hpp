#pragma once

#include <stdexcept>
#include <string>

#include "orbit_rank/matrix.hpp"
#include "orbit_rank/polynomial.hpp"

namespace orbit_rank {

/// Raised when a routine requiring a skew-symmetric matrix gets something else.
class NotSkewError : public std::invalid_argument {
 public:
  explicit NotSkewError(const std::string& what) : std::invalid_argument(what) {}
};

/// Pfaffian of a skew-symmetric polynomial matrix by recursive expansion
/// along the first row. Odd sizes give 0; the empty matrix gives 1.
/// Satisfies sym_pfaffian(m)^2 == sym_det(m).
MPoly sym_pfaffian(const PolyMatrix& m);

/// Determinant of a polynomial matrix. Skew input goes through the
/// Pfaffian; anything else through cofactor expansion.
MPoly sym_det(const PolyMatrix& m);

/// Plain Laplace expansion along the first row, memoized on column subsets.
MPoly cofactor_det(const PolyMatrix& m);

/// Embeds a rational matrix as constant polynomials in `nvars` variables.
PolyMatrix constant_matrix(const Mat& m, std::size_t nvars = 0);

}  // namespace orbit_rank

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orbit_rank/matrix.hpp"
#include "orbit_rank/polynomial.hpp"
#include "orbit_rank/rational.hpp"

namespace orbit_rank {

/// Base class for every input or precondition failure reported by the library.
class LieError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class JacobiViolation : public LieError {
 public:
  JacobiViolation(std::size_t i, std::size_t j, std::size_t k, RatVec residual, const std::string& what)
      : LieError(what), i_(i), j_(j), k_(k), residual_(std::move(residual)) {}
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }
  std::size_t k() const { return k_; }
  const RatVec& residual() const { return residual_; }

 private:
  std::size_t i_, j_, k_;
  RatVec residual_;
};

class DuplicateBasisName : public LieError {
 public:
  using LieError::LieError;
};

class IndexOutOfRange : public LieError {
 public:
  using LieError::LieError;
};

/// Unvalidated bracket table: (j, k) -> coordinates of [X_j, X_k].
/// Entries with j > k are folded in with a sign flip by validate().
struct BracketTable {
  std::size_t dim = 0;
  std::vector<std::string> names;
  std::map<std::pair<std::size_t, std::size_t>, RatVec> brackets;
};

/// Finite-dimensional real Lie algebra with exact rational structure
/// constants. Only j < k is stored; [X_k, X_j] = -[X_j, X_k]. Instances
/// only come out of validate(), so the Jacobi identity always holds.
class LieAlgebra {
 public:
  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::map<std::pair<std::size_t, std::size_t>, RatVec>& constants() const { return constants_; }

  /// Coordinates of [X_j, X_k] for arbitrary j, k.
  RatVec bracket_basis(std::size_t j, std::size_t k) const;
  /// Bilinear extension to coordinate vectors.
  RatVec bracket(const RatVec& x, const RatVec& y) const;
  RatVec basis_vector(std::size_t i) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) = default;

 private:
  friend LieAlgebra validate(const BracketTable& raw);
  std::vector<std::string> names_;
  std::map<std::pair<std::size_t, std::size_t>, RatVec> constants_;
};

/// Checks names, indices and the Jacobi identity over every triple i<j<k.
/// Throws JacobiViolation with the first failing triple in lexicographic order.
LieAlgebra validate(const BracketTable& raw);

/// Sum of cyclic double brackets for a raw table; zero iff Jacobi holds
/// on (i, j, k). Used by validate() and by tests.
RatVec jacobi_residual(const BracketTable& raw, std::size_t i, std::size_t j, std::size_t k);

// ---------------------------------------------------------------- structure

/// span{[x, y] : x in a, y in b}
Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b);

/// g, [g,g], [[g,g],[g,g]], ... until it stabilizes. A nonzero stable term
/// appears twice (sl2 gives dims [3, 3]); a zero one once.
std::vector<Subspace> derived_series(const LieAlgebra& L);
/// g, [g,g], [g,[g,g]], ... until it stabilizes.
std::vector<Subspace> lower_central_series(const LieAlgebra& L);

bool is_solvable(const LieAlgebra& L);
bool is_nilpotent(const LieAlgebra& L);
bool is_abelian(const LieAlgebra& L);

/// r = dim g - dim [g,g]
std::size_t abelianization_dim(const LieAlgebra& L);
/// [g,g]^⊥ inside g*, in dual-basis coordinates.
Subspace annihilator_of_derived(const LieAlgebra& L);
Subspace center(const LieAlgebra& L);

struct StructureReport {
  std::vector<std::size_t> derived_series_dims;
  std::vector<std::size_t> lower_central_series_dims;
  bool solvable = false;
  bool nilpotent = false;
  std::size_t abelianization_dim = 0;
  std::size_t center_dim = 0;
};

StructureReport analyze_structure(const LieAlgebra& L);

/// Matrix of Y ↦ [X, Y]: column k holds [X, X_k].
Mat ad_matrix(const LieAlgebra& L, const RatVec& x);

/// det(λI - m), exact (Faddeev-LeVerrier).
UPoly characteristic_polynomial(const Mat& m);

/// True iff p has a root iμ with μ real and nonzero.
bool has_nonzero_imaginary_root(const UPoly& p);

// ---------------------------------------------------------------- exponentiality

enum class ExpStatus { certified_no, heuristic_yes, asserted };

std::string to_string(ExpStatus s);

struct ExponentialityVerdict {
  ExpStatus status = ExpStatus::heuristic_yes;
  /// Present iff status == certified_no: ad(witness) has an eigenvalue iμ, μ ≠ 0.
  std::optional<RatVec> witness;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
};

/// Spectral screen: tests every basis vector, then `trials` random rational
/// combinations drawn from `seed`. Requires a solvable algebra.
ExponentialityVerdict exponentiality_check(const LieAlgebra& L, std::uint64_t seed, std::size_t trials);

/// Verdict used when the caller vouches for exponentiality.
ExponentialityVerdict asserted_exponential();

// ---------------------------------------------------------------- catalog

struct CatalogEntry {
  std::string name;
  std::string params;  ///< parameter schema, empty when none
  std::string description;
};

const std::vector<CatalogEntry>& catalog_entries();

/// Named algebra, e.g. catalog("heisenberg", "2") or catalog("grelaud", "1/2").
/// Throws LieError on unknown names or invalid parameters.
LieAlgebra catalog(const std::string& name, const std::string& params = "");

/// Parses `name[:params]` with `+` joining direct summands, e.g. `axb+axb`.
LieAlgebra catalog_spec(const std::string& spec);

/// Bases concatenated, no cross brackets. Colliding names get suffixes 1 and 2.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Raw table of an already valid algebra (for perturbation and rendering).
BracketTable to_table(const LieAlgebra& L);

}  // namespace orbit_rank

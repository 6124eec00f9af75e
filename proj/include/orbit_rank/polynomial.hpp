#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orbit_rank/rational.hpp"

namespace orbit_rank {

/// Dense univariate polynomial, coefficients lowest degree first.
/// The zero polynomial has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(RatVec coeffs);
  static UPoly constant(const Rat& c);
  static UPoly monomial(const Rat& c, std::size_t degree);
  /// (x - root)
  static UPoly linear_factor(const Rat& root);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const RatVec& coeffs() const { return coeffs_; }
  Rat coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }
  const Rat& leading() const { return coeffs_.back(); }

  Rat operator()(const Rat& x) const;
  UPoly derivative() const;
  /// Scaled to integer coefficients with gcd 1 and the sign of the leading
  /// coefficient preserved.
  UPoly primitive() const;
  UPoly monic() const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rat& c, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  RatVec coeffs_;
};

/// Euclidean division a = q b + r with deg r < deg b. Throws on b = 0.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

using Exponent = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial over Q. Zero coefficients are never
/// stored and every exponent vector has length nvars().
class MPoly {
 public:
  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static MPoly constant(std::size_t nvars, const Rat& c);
  static MPoly variable(std::size_t nvars, std::size_t index);
  /// Σ coeffs[l] x_l
  static MPoly linear(std::span<const Rat> coeffs);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponent, Rat>& terms() const { return terms_; }
  int total_degree() const;

  void add_term(const Exponent& e, const Rat& c);

  Rat evaluate(std::span<const Rat> point) const;
  /// Restriction t ↦ p(base + t·direction) as a univariate polynomial.
  UPoly restrict_to_line(std::span<const Rat> base, std::span<const Rat> direction) const;

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Rat& c, const MPoly& a);
  MPoly& operator+=(const MPoly& other);
  friend bool operator==(const MPoly& a, const MPoly& b) = default;

  /// Graded-lexicographic order, highest term first, e.g.
  /// `xi_X^2 - 1/2*xi_X*xi_Y + 3`. The zero polynomial renders as `0`.
  std::string to_string(std::span<const std::string> names) const;
  /// Same with generic names x1..xn.
  std::string to_string() const;

 private:
  std::size_t nvars_;
  std::map<Exponent, Rat> terms_;
};

/// Square matrix of multivariate polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t n, std::size_t nvars) : n_(n), nvars_(nvars), entries_(n * n, MPoly(nvars)) {}
  std::size_t size() const { return n_; }
  std::size_t nvars() const { return nvars_; }
  MPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  const MPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  bool is_skew() const;

 private:
  std::size_t n_;
  std::size_t nvars_;
  std::vector<MPoly> entries_;
};

}  // namespace orbit_rank

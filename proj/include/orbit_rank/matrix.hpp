#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "orbit_rank/rational.hpp"

namespace orbit_rank {

/// Dense row-major matrix of exact rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Builds from nested rows; every row must have the same length.
  static Mat from_rows(const std::vector<RatVec>& rows);
  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rat> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Rat> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  RatVec apply(std::span<const Rat> v) const;
  Mat operator*(const Mat& other) const;
  Mat transpose() const;
  bool is_zero() const;

  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

struct RrefResult {
  Mat rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Rows are cleared to integers and eliminated
/// fraction-free (Bareiss), then normalized so every pivot is 1 and the
/// zero rows are dropped to the bottom.
RrefResult rref_rank(const Mat& m);

inline std::size_t rank(const Mat& m) { return rref_rank(m).rank; }

/// Determinant by Bareiss elimination. Square input only.
Rat det_bareiss(const Mat& m);

/// A subspace of Q^n stored as an RREF basis (one row per basis vector).
/// Two subspaces are equal iff their bases are equal matrices.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : basis_(0, ambient_dim) {}
  /// Span of the given rows; redundant rows are dropped.
  static Subspace span(std::size_t ambient_dim, const std::vector<RatVec>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  RatVec vector(std::size_t i) const;

  bool contains(std::span<const Rat> v) const;
  /// Annihilator in the dual space: functionals vanishing on this subspace.
  Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  explicit Subspace(Mat basis) : basis_(std::move(basis)) {}
  Mat basis_;
};

/// Null space {v : m v = 0}.
Subspace kernel_basis(const Mat& m);

}  // namespace orbit_rank

#include "orbit_rank/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace orbit_rank {

Mat Mat::from_rows(const std::vector<RatVec>& rows) {
  if (rows.empty()) return {};
  Mat m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVec Mat::apply(std::span<const Rat> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  RatVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rat acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!orbit_rank::is_zero((*this)(r, c))) acc += (*this)(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

Mat Mat::operator*(const Mat& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product size mismatch");
  Mat out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (orbit_rank::is_zero(a)) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  }
  return out;
}

Mat Mat::transpose() const {
  Mat out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

bool Mat::is_zero() const {
  for (const auto& x : data_) {
    if (!orbit_rank::is_zero(x)) return false;
  }
  return true;
}

RrefResult rref_rank(const Mat& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  // Scale each row to integers; row scaling keeps the row space.
  std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Int lcm = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).get_num() * (lcm / m(r, c).get_den());
  }

  // Fraction-free forward elimination. Every intermediate entry is a minor
  // of the input, so the division by the previous pivot is exact.
  std::vector<std::size_t> pivots;
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Int t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }

  // Normalize pivots to 1 and clear above them.
  Mat out(rows, cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const Int& piv = a[i][pivots[i]];
    for (std::size_t j = 0; j < cols; ++j) {
      out(i, j) = Rat(a[i][j], piv);
      out(i, j).canonicalize();
    }
  }
  for (std::size_t i = pivots.size(); i-- > 0;) {
    const std::size_t pc = pivots[i];
    for (std::size_t k = 0; k < i; ++k) {
      Rat f = out(k, pc);
      if (is_zero(f)) continue;
      for (std::size_t j = pc; j < cols; ++j) out(k, j) -= f * out(i, j);
    }
  }
  return {std::move(out), pivots.size(), std::move(pivots)};
}

Rat det_bareiss(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Mat a = m;
  Rat prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(a(p, k))) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<RatVec>& vectors) {
  if (vectors.empty()) return Subspace(ambient_dim);
  Mat m(vectors.size(), ambient_dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient_dim) throw std::invalid_argument("vector length does not match ambient dimension");
    for (std::size_t c = 0; c < ambient_dim; ++c) m(r, c) = vectors[r][c];
  }
  RrefResult red = rref_rank(m);
  Mat basis(red.rank, ambient_dim);
  for (std::size_t r = 0; r < red.rank; ++r) {
    for (std::size_t c = 0; c < ambient_dim; ++c) basis(r, c) = red.rref(r, c);
  }
  return Subspace(std::move(basis));
}

Subspace Subspace::full(std::size_t ambient_dim) { return Subspace(Mat::identity(ambient_dim)); }

RatVec Subspace::vector(std::size_t i) const {
  auto row = basis_.row(i);
  return RatVec(row.begin(), row.end());
}

bool Subspace::contains(std::span<const Rat> v) const {
  if (v.size() != ambient_dim()) throw std::invalid_argument("vector length does not match ambient dimension");
  Mat m(dim() + 1, ambient_dim());
  for (std::size_t r = 0; r < dim(); ++r) {
    for (std::size_t c = 0; c < ambient_dim(); ++c) m(r, c) = basis_(r, c);
  }
  for (std::size_t c = 0; c < ambient_dim(); ++c) m(dim(), c) = v[c];
  return rank(m) == dim();
}

Subspace Subspace::annihilator() const {
  if (dim() == 0) return full(ambient_dim());
  return kernel_basis(basis_);
}

Subspace kernel_basis(const Mat& m) {
  const std::size_t cols = m.cols();
  RrefResult red = rref_rank(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;
  std::vector<RatVec> vectors;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i) v[red.pivots[i]] = -red.rref(i, f);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(cols, vectors);
}

}  // namespace orbit_rank

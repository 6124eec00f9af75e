// Independent oracles and random generators shared by the test suites.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "orbit_rank/coadjoint.hpp"
#include "orbit_rank/lie_algebra.hpp"
#include "orbit_rank/matrix.hpp"
#include "orbit_rank/polynomial.hpp"

namespace oracle {

using orbit_rank::BracketTable;
using orbit_rank::LieAlgebra;
using orbit_rank::Mat;
using orbit_rank::Rat;
using orbit_rank::RatVec;
using orbit_rank::UPoly;

// ---------------------------------------------------------------- linear algebra

/// Permutation-sum determinant.
inline Rat leibniz_det(const Mat& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rat total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
    Rat term = inversions % 2 ? -1 : 1;
    for (std::size_t r = 0; r < n && term != 0; ++r) term *= m(r, perm[r]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Largest k with a nonvanishing k x k minor.
inline std::size_t minor_rank(const Mat& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    for (const auto& r : rs)
      for (const auto& c : cs) {
        Mat sub(k, k);
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(r[a], c[b]);
        if (leibniz_det(sub) != 0) return k;
      }
  }
  return 0;
}

/// Gauss-Jordan inverse; nullopt when singular.
inline std::optional<Mat> inverse(const Mat& m) {
  const std::size_t n = m.rows();
  Mat a = m, inv = Mat::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    for (std::size_t k = 0; k < n; ++k) {
      std::swap(a(p, k), a(c, k));
      std::swap(inv(p, k), inv(c, k));
    }
    const Rat s = a(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      a(c, k) /= s;
      inv(c, k) /= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Rat f = a(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) -= f * a(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

// ---------------------------------------------------------------- random data

inline Rat random_rat(std::mt19937_64& rng, int num_range = 9, int max_den = 5) {
  std::uniform_int_distribution<int> num(-num_range, num_range), den(1, max_den);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Mat random_mat(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range = 9, int max_den = 1) {
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_rat(rng, range, max_den);
  return m;
}

inline Mat random_skew(std::mt19937_64& rng, std::size_t n, int range = 9, int max_den = 5) {
  Mat m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) {
      m(r, c) = random_rat(rng, range, max_den);
      m(c, r) = -m(r, c);
    }
  return m;
}

/// Integer matrix of rank at most `rank`, as a product of random factors.
inline Mat random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t rank) {
  return random_mat(rng, rows, rank, 3) * random_mat(rng, rank, cols, 3);
}

// ---------------------------------------------------------------- Lie algebras

/// [X_i, [X_j, X_k]] computed from the raw table, with antisymmetry applied.
inline RatVec raw_bracket(const BracketTable& t, const RatVec& x, const RatVec& y) {
  RatVec out(t.dim);
  for (const auto& [key, v] : t.brackets) {
    const auto [j, k] = key;
    const Rat c = x[j] * y[k] - x[k] * y[j];
    if (c == 0) continue;
    for (std::size_t l = 0; l < t.dim; ++l) out[l] += c * v[l];
  }
  return out;
}

inline RatVec unit(std::size_t n, std::size_t i) {
  RatVec v(n);
  v[i] = 1;
  return v;
}

/// Cyclic sum [[X_i,X_j],X_k] + [[X_j,X_k],X_i] + [[X_k,X_i],X_j].
inline RatVec jacobi_sum(const BracketTable& t, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = t.dim;
  const RatVec a = unit(n, i), b = unit(n, j), c = unit(n, k);
  const RatVec s1 = raw_bracket(t, raw_bracket(t, a, b), c);
  const RatVec s2 = raw_bracket(t, raw_bracket(t, b, c), a);
  const RatVec s3 = raw_bracket(t, raw_bracket(t, c, a), b);
  RatVec out(n);
  for (std::size_t l = 0; l < n; ++l) out[l] = s1[l] + s2[l] + s3[l];
  return out;
}

/// First (i<j<k) with a nonzero cyclic Jacobi sum, by direct evaluation.
inline std::optional<std::array<std::size_t, 3>> first_jacobi_failure(const BracketTable& t) {
  const std::size_t n = t.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const RatVec s = jacobi_sum(t, i, j, k);
        if (std::any_of(s.begin(), s.end(), [](const Rat& x) { return x != 0; }))
          return std::array<std::size_t, 3>{i, j, k};
      }
  return std::nullopt;
}

inline std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("X" + std::to_string(i + 1));
  return out;
}

/// R A ⋉ R^{n-1} with [A, X_i] = sum_j M_ji X_j; always a Lie algebra.
inline BracketTable random_semidirect(std::mt19937_64& rng, std::size_t n) {
  BracketTable t{n, names(n), {}};
  if (n < 2) return t;
  const Mat m = random_mat(rng, n - 1, n - 1, 3);
  for (std::size_t i = 1; i < n; ++i) {
    RatVec v(n);
    for (std::size_t j = 1; j < n; ++j) v[j] = m(j - 1, i - 1);
    if (std::any_of(v.begin(), v.end(), [](const Rat& x) { return x != 0; })) t.brackets[{0, i}] = v;
  }
  return t;
}

/// Nilpotent algebra of one of two always-valid shapes: a two-step algebra
/// V + Z with random brackets V x V -> Z (Z central), or R A ⋉ R^{n-1} with
/// a strictly triangular action.
inline BracketTable random_nilpotent(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> coin(0, 2);
  BracketTable t{n, names(n), {}};
  if (n < 2) return t;
  if (coin(rng) == 0) {
    for (std::size_t i = 2; i < n; ++i) {
      RatVec v(n);
      for (std::size_t j = i + 1; j < n; ++j) v[j] = random_rat(rng, 3, 1);
      if (std::any_of(v.begin(), v.end(), [](const Rat& x) { return x != 0; })) t.brackets[{0, i - 1}] = v;
    }
    return t;
  }
  const std::size_t centre = 1 + std::uniform_int_distribution<std::size_t>(0, (n - 1) / 2)(rng);
  const std::size_t v_dim = n - centre;
  for (std::size_t i = 0; i < v_dim; ++i)
    for (std::size_t j = i + 1; j < v_dim; ++j) {
      if (coin(rng) == 0) continue;
      RatVec v(n);
      for (std::size_t k = v_dim; k < n; ++k) v[k] = random_rat(rng, 3, 1);
      if (std::any_of(v.begin(), v.end(), [](const Rat& x) { return x != 0; })) t.brackets[{i, j}] = v;
    }
  return t;
}

/// Structure constants in the basis Y_i = sum_k T_ki X_k.
inline BracketTable change_basis(const BracketTable& t, const Mat& T) {
  const std::size_t n = t.dim;
  const Mat Tinv = *inverse(T);
  BracketTable out{n, t.names, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      RatVec yi(n), yj(n);
      for (std::size_t k = 0; k < n; ++k) {
        yi[k] = T(k, i);
        yj[k] = T(k, j);
      }
      const RatVec b = raw_bracket(t, yi, yj);
      const RatVec c = Tinv.apply(b);
      if (std::any_of(c.begin(), c.end(), [](const Rat& x) { return x != 0; })) out.brackets[{i, j}] = c;
    }
  return out;
}

inline Mat random_invertible(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    Mat T = random_mat(rng, n, n, 2);
    if (inverse(T)) return T;
  }
}

/// A valid algebra of dimension n, drawn from several constructions.
inline LieAlgebra random_algebra(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> pick(0, 3);
  BracketTable t;
  switch (pick(rng)) {
    case 0: t = random_semidirect(rng, n); break;
    case 1: t = random_nilpotent(rng, n); break;
    case 2: t = change_basis(random_semidirect(rng, n), random_invertible(rng, n)); break;
    default: t = change_basis(random_nilpotent(rng, n), random_invertible(rng, n)); break;
  }
  return orbit_rank::validate(t);
}

// ---------------------------------------------------------------- real roots

inline UPoly naive_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    // Long division by hand, independent of the library's divmod.
    RatVec r = a.coeffs();
    const RatVec& d = b.coeffs();
    while (r.size() >= d.size() && !r.empty()) {
      const Rat q = r.back() / d.back();
      const std::size_t shift = r.size() - d.size();
      for (std::size_t k = 0; k < d.size(); ++k) r[shift + k] -= q * d[k];
      while (!r.empty() && r.back() == 0) r.pop_back();
    }
    a = b;
    b = UPoly(r);
  }
  return a;
}

inline Rat eval(const RatVec& c, const Rat& x) {
  Rat acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline RatVec deriv(const RatVec& c) {
  RatVec out;
  for (std::size_t k = 1; k < c.size(); ++k) out.push_back(c[k] * static_cast<long>(k));
  return out;
}

/// Upper bound for |p| on [a, b] by the absolute-coefficient majorant.
inline Rat abs_bound(const RatVec& c, const Rat& a, const Rat& b) {
  const Rat r = std::max(abs(a), abs(b));
  Rat acc = 0, pw = 1;
  for (const auto& x : c) {
    acc += abs(x) * pw;
    pw *= r;
  }
  return acc;
}

/// Root count of a squarefree p on [a, b] by bisection with a Lipschitz
/// exclusion test. Returns nullopt when the depth limit is hit.
inline std::optional<std::size_t> bisect(const RatVec& p, const RatVec& dp, const Rat& a, const Rat& b, int depth) {
  const Rat pa = eval(p, a), pb = eval(p, b);
  const Rat h = b - a;
  const Rat mid = a + h * Rat(1, 2);
  const Rat lip = abs_bound(dp, a, b);
  // |p(x)| >= |p(mid)| - L h/2 > 0 on the whole cell.
  if (abs(eval(p, mid)) > lip * h / 2) return 0;
  if (pa * pb < 0 && !dp.empty()) {
    const RatVec ddp = deriv(dp);
    const Rat lip2 = abs_bound(ddp, a, b);
    if (abs(eval(dp, mid)) > lip2 * h / 2) return 1;  // monotone cell
  }
  if (depth == 0) return std::nullopt;
  // Split off-center so split points avoid small-denominator roots.
  Rat split = a + h * Rat(499, 997);
  for (long k = 1; eval(p, split) == 0; ++k) split = a + h * Rat(499 + k, 997);
  auto l = bisect(p, dp, a, split, depth - 1);
  auto r = bisect(p, dp, split, b, depth - 1);
  if (!l || !r) return std::nullopt;
  return *l + *r;
}

/// Number of distinct real roots of p in the open interval (lo, hi).
inline std::optional<std::size_t> bisection_root_count(const UPoly& p, const Rat& lo, const Rat& hi) {
  RatVec c = p.coeffs();
  UPoly sqf = p;
  const UPoly g = naive_gcd(p, UPoly(deriv(c)));
  if (g.degree() > 0) {
    // p / g by hand.
    RatVec r = c, q(c.size() - g.coeffs().size() + 1);
    const RatVec& d = g.coeffs();
    while (r.size() >= d.size()) {
      const Rat t = r.back() / d.back();
      const std::size_t shift = r.size() - d.size();
      q[shift] = t;
      for (std::size_t k = 0; k < d.size(); ++k) r[shift + k] -= t * d[k];
      r.pop_back();
    }
    sqf = UPoly(q);
  }
  c = sqf.coeffs();
  // Grid of width-1/2 cells. Roots sitting exactly on grid points are
  // deflated away; interior ones are counted.
  std::vector<Rat> grid;
  for (Rat a = lo; a < hi; a += Rat(1, 2)) grid.push_back(a);
  grid.push_back(hi);
  std::size_t total = 0;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const Rat& e = grid[g];
    while (c.size() > 1 && eval(c, e) == 0) {
      RatVec q(c.size() - 1);
      Rat carry = 0;
      for (std::size_t k = c.size() - 1; k > 0; --k) {
        carry = c[k] + carry * e;
        q[k - 1] = carry;
      }
      c = q;
      if (g != 0 && g + 1 != grid.size()) ++total;
    }
  }
  if (c.size() <= 1) return total;
  const RatVec dc = deriv(c);
  for (std::size_t g = 0; g + 1 < grid.size(); ++g) {
    auto n = bisect(c, dc, grid[g], grid[g + 1], 60);
    if (!n) return std::nullopt;
    total += *n;
  }
  return total;
}

}  // namespace oracle

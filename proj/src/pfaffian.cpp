#include "orbit_rank/pfaffian.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace orbit_rank {

namespace {

// Pf over the index set `idx` (kept in increasing order):
//   Pf = Σ_{j>0} (-1)^{j+1} a[idx0][idxj] Pf(idx \ {idx0, idxj}).
MPoly pfaffian_rec(const PolyMatrix& m, const std::vector<std::size_t>& idx) {
  const std::size_t nvars = m.nvars();
  if (idx.empty()) return MPoly::constant(nvars, Rat(1));
  MPoly acc(nvars);
  std::vector<std::size_t> rest;
  rest.reserve(idx.size() - 2);
  for (std::size_t j = 1; j < idx.size(); ++j) {
    const MPoly& entry = m(idx[0], idx[j]);
    if (entry.is_zero()) continue;
    rest.clear();
    for (std::size_t k = 1; k < idx.size(); ++k) {
      if (k != j) rest.push_back(idx[k]);
    }
    MPoly sub = pfaffian_rec(m, rest);
    if (sub.is_zero()) continue;
    MPoly term = entry * sub;
    if (j % 2 == 0) term = -term;
    acc += term;
  }
  return acc;
}

}  // namespace

MPoly sym_pfaffian(const PolyMatrix& m) {
  if (!m.is_skew()) throw NotSkewError("Pfaffian requires a skew-symmetric matrix");
  if (m.size() % 2 == 1) return MPoly(m.nvars());
  std::vector<std::size_t> idx(m.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return pfaffian_rec(m, idx);
}

MPoly cofactor_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return MPoly::constant(m.nvars(), Rat(1));
  if (n > 20) throw std::invalid_argument("cofactor expansion limited to n <= 20");
  // memo[mask] = det of the minor on rows n-popcount(mask).. and columns in mask.
  std::unordered_map<std::uint32_t, MPoly> memo;
  auto rec = [&](auto&& self, std::size_t row, std::uint32_t cols) -> MPoly {
    if (row == n) return MPoly::constant(m.nvars(), Rat(1));
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    MPoly acc(m.nvars());
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(cols & (1u << c))) continue;
      const MPoly& entry = m(row, c);
      if (!entry.is_zero()) {
        MPoly term = entry * self(self, row + 1, cols & ~(1u << c));
        acc += sign > 0 ? term : -term;
      }
      sign = -sign;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return rec(rec, 0, (1u << n) - 1);
}

MPoly sym_det(const PolyMatrix& m) {
  if (m.is_skew()) {
    MPoly pf = sym_pfaffian(m);
    return pf * pf;
  }
  return cofactor_det(m);
}

PolyMatrix constant_matrix(const Mat& m, std::size_t nvars) {
  if (m.rows() != m.cols()) throw std::invalid_argument("polynomial matrix must be square");
  PolyMatrix out(m.rows(), nvars);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = MPoly::constant(nvars, m(r, c));
  }
  return out;
}

}  // namespace orbit_rank

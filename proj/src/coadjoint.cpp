#include "orbit_rank/coadjoint.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>

#include "orbit_rank/pfaffian.hpp"
#include "orbit_rank/sturm.hpp"

namespace orbit_rank {

std::vector<std::string> dual_names(const LieAlgebra& L) {
  std::vector<std::string> out;
  out.reserve(L.dim());
  for (const auto& n : L.basis_names()) out.push_back("xi_" + n);
  return out;
}

PolyMatrix b_matrix_sym(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  PolyMatrix m(n, n);
  for (const auto& [key, v] : L.constants()) {
    auto [j, k] = key;
    MPoly entry = MPoly::linear(v);
    m(k, j) = -entry;
    m(j, k) = std::move(entry);
  }
  return m;
}

Mat b_matrix_at(const LieAlgebra& L, const CoadjointPoint& xi) {
  const std::size_t n = L.dim();
  if (xi.coords.size() != n) {
    throw std::invalid_argument("coadjoint point of length " + std::to_string(xi.coords.size()) +
                                " for dimension " + std::to_string(n));
  }
  Mat m(n, n);
  for (const auto& [key, v] : L.constants()) {
    auto [j, k] = key;
    Rat s = 0;
    for (std::size_t l = 0; l < n; ++l) s += v[l] * xi.coords[l];
    m(j, k) = s;
    m(k, j) = -s;
  }
  return m;
}

MPoly pfaffian_polynomial(const LieAlgebra& L) { return sym_pfaffian(b_matrix_sym(L)); }

MPoly p_polynomial(const LieAlgebra& L) {
  MPoly pf = pfaffian_polynomial(L);
  return pf * pf;
}

bool has_open_orbits(const LieAlgebra& L) { return !pfaffian_polynomial(L).is_zero(); }

OrbitPointData orbit_data_at(const LieAlgebra& L, const CoadjointPoint& xi) {
  Mat b = b_matrix_at(L, xi);
  OrbitPointData out;
  out.orbit_dim = rank(b);
  out.isotropy = kernel_basis(b);
  out.open = out.orbit_dim == L.dim();
  return out;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

ComponentEstimate estimate_open_orbit_components(const LieAlgebra& L, std::size_t samples, std::uint64_t seed) {
  ComponentEstimate est;
  est.seed = seed;
  const MPoly pf = pfaffian_polynomial(L);
  if (pf.is_zero()) return est;

  const std::size_t n = L.dim();
  std::mt19937_64 rng(seed);
  const std::size_t max_draws = 1000 * (samples + 1);
  std::size_t draws = 0;
  while (est.samples.size() < samples) {
    if (++draws > max_draws) throw std::runtime_error("sampler kept hitting the zero set of P");
    CoadjointPoint xi;
    xi.coords.resize(n);
    for (auto& q : xi.coords) {
      auto den = static_cast<std::int64_t>(rng() % 64) + 1;
      auto num = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(20 * den + 1)) - 10 * den;
      q = make_rat(num, den);
    }
    if (is_zero(pf.evaluate(xi.coords))) continue;
    est.samples.push_back(std::move(xi));
  }
  est.sample_count = est.samples.size();

  DisjointSets sets(est.sample_count);
  RatVec direction(n);
  for (std::size_t i = 0; i < est.sample_count; ++i) {
    const RatVec& a = est.samples[i].coords;
    for (std::size_t j = i + 1; j < est.sample_count; ++j) {
      if (sets.find(i) == sets.find(j)) continue;
      const RatVec& b = est.samples[j].coords;
      for (std::size_t l = 0; l < n; ++l) direction[l] = b[l] - a[l];
      UPoly segment = pf.restrict_to_line(a, direction);
      if (sturm_root_count(segment, Rat(0), Rat(1)) != 0) continue;
      est.certificates.push_back({i, j, true});
      sets.unite(i, j);
    }
  }

  std::vector<std::size_t> label_of_root(est.sample_count, SIZE_MAX);
  est.component_of.resize(est.sample_count);
  for (std::size_t i = 0; i < est.sample_count; ++i) {
    std::size_t r = sets.find(i);
    if (label_of_root[r] == SIZE_MAX) label_of_root[r] = est.component_count++;
    est.component_of[i] = label_of_root[r];
  }
  return est;
}

}  // namespace orbit_rank

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "orbit_rank/coadjoint.hpp"
#include "orbit_rank/pfaffian.hpp"
#include "support.hpp"

using namespace orbit_rank;

namespace {

CoadjointPoint pt(std::initializer_list<int> xs) {
  CoadjointPoint p;
  for (int x : xs) p.coords.push_back(x);
  return p;
}

CoadjointPoint random_point(std::mt19937_64& rng, std::size_t n) {
  CoadjointPoint p;
  for (std::size_t i = 0; i < n; ++i) p.coords.push_back(oracle::random_rat(rng, 10, 7));
  return p;
}

std::vector<LieAlgebra> sample_algebras(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<LieAlgebra> out{catalog("abelian", "2"), catalog("axb"),        catalog("heisenberg", "1"),
                              catalog("filiform", "4"), catalog("grelaud", "1"), catalog("oscillator"),
                              catalog("e2"),            catalog("sl2"),         catalog_spec("axb+axb"),
                              catalog_spec("axb+e2")};
  for (int i = 0; i < 30; ++i) out.push_back(oracle::random_algebra(rng, 2 + i % 5));
  return out;
}

}  // namespace

TEST(BMatrix, Examples) {
  const PolyMatrix b = b_matrix_sym(catalog("axb"));
  const auto names = dual_names(catalog("axb"));
  EXPECT_EQ(b(0, 1).to_string(names), "xi_Y");
  EXPECT_EQ(b(1, 0).to_string(names), "-xi_Y");
  EXPECT_TRUE(b(0, 0).is_zero());
  const PolyMatrix z = b_matrix_sym(catalog("abelian", "3"));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(z(i, j).is_zero());
  const PolyMatrix h = b_matrix_sym(catalog("heisenberg", "1"));
  EXPECT_EQ(h(0, 1).to_string(dual_names(catalog("heisenberg", "1"))), "xi_Z");
  EXPECT_TRUE(h(0, 2).is_zero());
  EXPECT_TRUE(h(1, 2).is_zero());
}

TEST(BMatrix, SkewForAllInputs) {
  for (const auto& L : sample_algebras(61)) EXPECT_TRUE(b_matrix_sym(L).is_skew());
}

TEST(PPolynomial, Examples) {
  EXPECT_EQ(p_polynomial(catalog("axb")).to_string(dual_names(catalog("axb"))), "xi_Y^2");
  EXPECT_TRUE(p_polynomial(catalog("heisenberg", "1")).is_zero());
  const LieAlgebra s = catalog_spec("axb+axb");
  EXPECT_EQ(p_polynomial(s).to_string(dual_names(s)), "xi_Y1^2*xi_Y2^2");
  EXPECT_TRUE(p_polynomial(catalog("oscillator")).is_zero());
}

TEST(PPolynomial, EqualsCofactorDeterminant) {
  for (const auto& L : sample_algebras(62)) {
    if (L.dim() > 6) continue;
    EXPECT_EQ(p_polynomial(L), cofactor_det(b_matrix_sym(L)));
  }
}

TEST(PPolynomial, VanishesInOddDimension) {
  std::mt19937_64 rng(63);
  for (int i = 0; i < 30; ++i) {
    const LieAlgebra L = oracle::random_algebra(rng, 1 + 2 * (i % 3));
    EXPECT_TRUE(p_polynomial(L).is_zero());
    // Pointwise confirmation by an independent determinant.
    EXPECT_EQ(oracle::leibniz_det(b_matrix_at(L, random_point(rng, L.dim()))), 0);
  }
}

TEST(OpenOrbits, Examples) {
  EXPECT_TRUE(has_open_orbits(catalog("axb")));
  EXPECT_FALSE(has_open_orbits(catalog("heisenberg", "1")));
  EXPECT_FALSE(has_open_orbits(catalog("heisenberg", "2")));
  EXPECT_FALSE(has_open_orbits(catalog("oscillator")));
  EXPECT_TRUE(has_open_orbits(catalog_spec("axb+axb")));
}

TEST(OrbitData, Examples) {
  const auto a = orbit_data_at(catalog("axb"), pt({0, 1}));
  EXPECT_EQ(a.orbit_dim, 2u);
  EXPECT_EQ(a.isotropy.dim(), 0u);
  EXPECT_TRUE(a.open);
  const auto h = orbit_data_at(catalog("heisenberg", "1"), pt({0, 0, 1}));
  EXPECT_EQ(h.orbit_dim, 2u);
  EXPECT_EQ(h.isotropy, Subspace::span(3, {RatVec{Rat(0), Rat(0), Rat(1)}}));
  EXPECT_FALSE(h.open);
  const auto z = orbit_data_at(catalog("filiform", "4"), pt({0, 0, 0, 0}));
  EXPECT_EQ(z.orbit_dim, 0u);
  EXPECT_EQ(z.isotropy, Subspace::full(4));
  EXPECT_FALSE(z.open);
  EXPECT_THROW(orbit_data_at(catalog("axb"), pt({1})), std::invalid_argument);
}

TEST(OrbitData, ParityOpennessAndRankNullity) {
  std::mt19937_64 rng(64);
  std::size_t points = 0;
  for (const auto& L : sample_algebras(65)) {
    const MPoly p = p_polynomial(L);
    for (int k = 0; k < 25; ++k, ++points) {
      const CoadjointPoint x = random_point(rng, L.dim());
      const auto d = orbit_data_at(L, x);
      EXPECT_EQ(d.orbit_dim % 2, 0u);
      EXPECT_EQ(d.orbit_dim + d.isotropy.dim(), L.dim());
      EXPECT_EQ(d.open, d.orbit_dim == L.dim());
      EXPECT_EQ(d.open, p.evaluate(x.coords) != 0);
      EXPECT_EQ(d.orbit_dim, oracle::minor_rank(b_matrix_at(L, x)));
    }
  }
  EXPECT_GE(points, 1000u);
}

TEST(Estimator, AxbFindsTwoHalfPlanes) {
  const auto e = estimate_open_orbit_components(catalog("axb"), 200, 0);
  EXPECT_EQ(e.component_count, 2u);
  EXPECT_EQ(e.sample_count, 200u);
  EXPECT_EQ(e.samples.size(), 200u);
  EXPECT_EQ(e.seed, 0u);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    EXPECT_EQ(estimate_open_orbit_components(catalog("axb"), 100, seed).component_count, 2u);
  }
}

TEST(Estimator, NoOpenOrbitsGivesEmptyGraph) {
  const auto e = estimate_open_orbit_components(catalog("heisenberg", "1"), 50, 0);
  EXPECT_EQ(e.component_count, 0u);
  EXPECT_TRUE(e.samples.empty());
  EXPECT_TRUE(e.certificates.empty());
}

TEST(Estimator, CertificatesAreExact) {
  for (const auto& L : {catalog("axb"), catalog_spec("axb+axb")}) {
    const auto e = estimate_open_orbit_components(L, 60, 5);
    const MPoly p = p_polynomial(L);
    for (const auto& s : e.samples) EXPECT_NE(p.evaluate(s.coords), 0);
    for (const auto& edge : e.certificates) {
      EXPECT_TRUE(edge.segment_root_free);
      const auto& a = e.samples[edge.from].coords;
      const auto& b = e.samples[edge.to].coords;
      // The endpoints lie in the same sign cell of every Y-coordinate.
      for (std::size_t i = 1; i < L.dim(); i += 2) EXPECT_EQ(sgn(a[i]), sgn(b[i]));
      EXPECT_EQ(e.component_of[edge.from], e.component_of[edge.to]);
    }
  }
}

TEST(Estimator, CountMatchesSignClassesForAxbSum) {
  // Components of {ξ_Y1 ξ_Y2 ≠ 0} are the four sign quadrants, each convex,
  // so the certificate graph connects exactly the samples sharing a quadrant.
  for (std::uint64_t seed : {0u, 4u}) {
    const LieAlgebra L = catalog_spec("axb+axb");
    const auto e = estimate_open_orbit_components(L, 120, seed);
    std::set<std::pair<int, int>> quadrants;
    for (const auto& s : e.samples) quadrants.insert({sgn(s.coords[1]), sgn(s.coords[3])});
    EXPECT_EQ(e.component_count, quadrants.size());
  }
}

TEST(Estimator, Deterministic) {
  const auto a = estimate_open_orbit_components(catalog_spec("axb+axb"), 80, 9);
  const auto b = estimate_open_orbit_components(catalog_spec("axb+axb"), 80, 9);
  EXPECT_EQ(a.component_of, b.component_of);
  EXPECT_EQ(a.component_count, b.component_count);
  ASSERT_EQ(a.samples.size(), b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) EXPECT_EQ(a.samples[i].coords, b.samples[i].coords);
}

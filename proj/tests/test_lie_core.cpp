#include <gtest/gtest.h>

#include <random>

#include "orbit_rank/lie_algebra.hpp"
#include "support.hpp"

using namespace orbit_rank;

namespace {

std::vector<std::size_t> dims(const std::vector<Subspace>& s) {
  std::vector<std::size_t> out;
  for (const auto& x : s) out.push_back(x.dim());
  return out;
}

std::vector<LieAlgebra> solvable_catalog() {
  return {catalog("abelian", "1"), catalog("abelian", "3"), catalog("axb"),         catalog("heisenberg", "1"),
          catalog("heisenberg", "2"), catalog("filiform", "4"), catalog("filiform", "6"), catalog("grelaud", "1"),
          catalog("grelaud", "1/2"), catalog("oscillator"),     catalog("e2"),          catalog_spec("axb+axb")};
}

RatVec vec(std::initializer_list<int> xs) {
  RatVec v;
  for (int x : xs) v.push_back(x);
  return v;
}

}  // namespace

TEST(Validate, AcceptsEveryCatalogEntry) {
  for (const auto& e : catalog_entries()) {
    const std::string params = e.params.empty() ? "" : e.name == "grelaud" ? "2/3" : "3";
    EXPECT_NO_THROW(catalog(e.name, params)) << e.name;
  }
}

TEST(Validate, HeisenbergAndAxbTables) {
  BracketTable h{3, {"P", "Q", "Z"}, {{{0, 1}, vec({0, 0, 1})}}};
  EXPECT_EQ(validate(h).constants().size(), 1u);
  BracketTable a{2, {"X", "Y"}, {{{0, 1}, vec({0, 1})}}};
  EXPECT_EQ(validate(a), catalog("axb"));
}

TEST(Validate, ReversedPairsFoldWithSignFlip) {
  BracketTable a{2, {"X", "Y"}, {{{1, 0}, vec({0, -1})}}};
  EXPECT_EQ(validate(a), catalog("axb"));
  BracketTable both{2, {"X", "Y"}, {{{0, 1}, vec({0, 1})}, {{1, 0}, vec({0, -1})}}};
  EXPECT_THROW(validate(both), LieError);
}

TEST(Validate, StructuralErrors) {
  EXPECT_THROW(validate(BracketTable{2, {"X", "X"}, {}}), DuplicateBasisName);
  EXPECT_THROW(validate(BracketTable{2, {"X", "Y"}, {{{0, 2}, vec({0, 1})}}}), IndexOutOfRange);
  EXPECT_THROW(validate(BracketTable{2, {"X", "Y"}, {{{0, 1}, vec({0, 1, 0})}}}), LieError);
  EXPECT_THROW(validate(BracketTable{2, {"X", "Y"}, {{{1, 1}, vec({0, 1})}}}), LieError);
}

TEST(Validate, CorruptedFiliformReportsOracleResidual) {
  BracketTable t = to_table(catalog("filiform", "4"));
  t.brackets[{0, 1}] = vec({1, 0, 1, 0});  // [e1,e2] = e3 + e1
  const auto fail = oracle::first_jacobi_failure(t);
  ASSERT_TRUE(fail);
  try {
    validate(t);
    FAIL() << "expected JacobiViolation";
  } catch (const JacobiViolation& e) {
    EXPECT_EQ((std::array<std::size_t, 3>{e.i(), e.j(), e.k()}), *fail);
    EXPECT_EQ(e.residual(), oracle::jacobi_sum(t, e.i(), e.j(), e.k()));
    EXPECT_EQ(e.residual(), vec({0, 0, 0, 1}));
  }
}

TEST(Validate, FiliformWithE2PerturbationIsStillALieAlgebra) {
  // [e1,e2] = e3 + e2 passes Jacobi: the cyclic sum on (e1,e2,e3) is [e3,e2] = 0.
  BracketTable t = to_table(catalog("filiform", "4"));
  t.brackets[{0, 1}] = vec({0, 1, 1, 0});
  EXPECT_FALSE(oracle::first_jacobi_failure(t));
  EXPECT_NO_THROW(validate(t));
}

TEST(Validate, SingleConstantPerturbationsAgreeWithOracle) {
  for (const std::string n : {"4", "5", "6"}) {
    const BracketTable base = to_table(catalog("filiform", n));
    const std::size_t d = base.dim;
    std::size_t rejected = 0, total = 0;
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          BracketTable t = base;
          auto& v = t.brackets[{j, k}];
          if (v.empty()) v.assign(d, Rat(0));
          v[l] += 1;
          const auto fail = oracle::first_jacobi_failure(t);
          ++total;
          if (fail) {
            ++rejected;
            EXPECT_THROW(validate(t), JacobiViolation);
          } else {
            EXPECT_NO_THROW(validate(t));
          }
        }
    // Most single perturbations break Jacobi, but not all of them.
    EXPECT_GT(rejected, total / 2) << n;
    EXPECT_LT(rejected, total) << n;
  }
}

TEST(Validate, RandomTablesAgreeWithOracle) {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> coin(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + trial % 3;
    BracketTable t{n, oracle::names(n), {}};
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        if (coin(rng) != 0) continue;
        RatVec v(n);
        v[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)] = oracle::random_rat(rng, 2, 1);
        t.brackets[{j, k}] = v;
      }
    if (oracle::first_jacobi_failure(t)) {
      EXPECT_THROW(validate(t), JacobiViolation);
    } else {
      EXPECT_NO_THROW(validate(t));
    }
  }
}

TEST(Structure, DerivedSeriesExamples) {
  EXPECT_EQ(dims(derived_series(catalog("heisenberg", "1"))), (std::vector<std::size_t>{3, 1, 0}));
  EXPECT_EQ(dims(derived_series(catalog("axb"))), (std::vector<std::size_t>{2, 1, 0}));
  EXPECT_EQ(dims(derived_series(catalog("abelian", "4"))), (std::vector<std::size_t>{4, 0}));
  EXPECT_EQ(dims(derived_series(catalog("sl2"))), (std::vector<std::size_t>{3, 3}));
}

TEST(Structure, SolvableAndNilpotentExamples) {
  for (const std::string m : {"1", "2", "3"}) {
    EXPECT_TRUE(is_solvable(catalog("heisenberg", m)));
    EXPECT_TRUE(is_nilpotent(catalog("heisenberg", m)));
  }
  EXPECT_TRUE(is_solvable(catalog("axb")));
  EXPECT_FALSE(is_nilpotent(catalog("axb")));
  EXPECT_FALSE(is_solvable(catalog("sl2")));
  EXPECT_EQ(dims(lower_central_series(catalog("axb"))), (std::vector<std::size_t>{2, 1}));
}

TEST(Structure, AbelianizationExamples) {
  EXPECT_EQ(abelianization_dim(catalog("heisenberg", "1")), 2u);
  EXPECT_EQ(abelianization_dim(catalog("axb")), 1u);
  EXPECT_EQ(abelianization_dim(catalog("abelian", "5")), 5u);
  EXPECT_EQ(abelianization_dim(catalog("grelaud", "1")), 1u);
  EXPECT_EQ(abelianization_dim(catalog_spec("axb+axb")), 2u);
  EXPECT_EQ(catalog_spec("axb+axb").dim(), 4u);
}

TEST(Structure, AnnihilatorExamples) {
  EXPECT_EQ(annihilator_of_derived(catalog("axb")), Subspace::span(2, {vec({1, 0})}));
  EXPECT_EQ(annihilator_of_derived(catalog("abelian", "3")), Subspace::full(3));
  EXPECT_EQ(annihilator_of_derived(catalog("heisenberg", "1")), Subspace::span(3, {vec({1, 0, 0}), vec({0, 1, 0})}));
}

TEST(Structure, PropertiesOverCatalogAndRandomAlgebras) {
  std::mt19937_64 rng(52);
  auto algebras = solvable_catalog();
  algebras.push_back(catalog("sl2"));
  for (int i = 0; i < 40; ++i) algebras.push_back(oracle::random_algebra(rng, 2 + i % 5));
  for (const auto& L : algebras) {
    const auto ds = dims(derived_series(L));
    for (std::size_t i = 1; i + 1 < ds.size(); ++i) EXPECT_LT(ds[i], ds[i - 1]);
    if (ds.size() >= 2 && ds[ds.size() - 1] == ds[ds.size() - 2]) EXPECT_NE(ds.back(), 0u);
    EXPECT_EQ(is_solvable(L), ds.back() == 0);
    if (is_nilpotent(L)) EXPECT_TRUE(is_solvable(L));
    EXPECT_EQ(annihilator_of_derived(L).dim(), abelianization_dim(L));
    EXPECT_EQ(abelianization_dim(L), L.dim() - (ds.size() > 1 ? ds[1] : 0));
    // Center: every basis bracket with a center element vanishes.
    const Subspace z = center(L);
    for (std::size_t i = 0; i < z.dim(); ++i)
      for (std::size_t k = 0; k < L.dim(); ++k)
        for (const auto& x : L.bracket(z.vector(i), L.basis_vector(k))) EXPECT_EQ(x, 0);
  }
  for (const auto& a : solvable_catalog())
    for (const auto& b : {catalog("axb"), catalog("heisenberg", "1"), catalog("abelian", "2")})
      EXPECT_EQ(abelianization_dim(direct_sum(a, b)), abelianization_dim(a) + abelianization_dim(b));
}

TEST(Structure, AdMatrixExamples) {
  const Mat a = ad_matrix(catalog("axb"), vec({1, 0}));
  EXPECT_EQ(a, Mat::from_rows({vec({0, 0}), vec({0, 1})}));
  EXPECT_TRUE(ad_matrix(catalog("heisenberg", "1"), vec({0, 0, 0})).is_zero());
  const Mat h = ad_matrix(catalog("heisenberg", "1"), vec({1, 0, 0}));
  EXPECT_EQ(h, Mat::from_rows({vec({0, 0, 0}), vec({0, 0, 0}), vec({0, 1, 0})}));
  EXPECT_THROW(ad_matrix(catalog("axb"), vec({1})), std::invalid_argument);
}

TEST(Structure, CharacteristicPolynomialMatchesDeterminantOracle) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat m = oracle::random_mat(rng, 4, 4, 5, 2);
    const UPoly p = characteristic_polynomial(m);
    for (int t = -3; t <= 3; ++t) {
      Mat shifted = m;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) shifted(i, j) = (i == j ? Rat(t) : Rat(0)) - m(i, j);
      EXPECT_EQ(p(Rat(t)), oracle::leibniz_det(shifted));
    }
  }
}

TEST(Exponentiality, OscillatorAndE2AreCertifiedNoWithBasisWitness) {
  for (const std::string name : {"oscillator", "e2"}) {
    for (std::uint64_t seed : {0u, 1u, 99u}) {
      const auto v = exponentiality_check(catalog(name), seed, 50);
      EXPECT_EQ(v.status, ExpStatus::certified_no);
      ASSERT_TRUE(v.witness);
      EXPECT_EQ(*v.witness, catalog(name).basis_vector(0));  // H
      EXPECT_TRUE(has_nonzero_imaginary_root(characteristic_polynomial(ad_matrix(catalog(name), *v.witness))));
    }
  }
}

TEST(Exponentiality, OscillatorCharacteristicPolynomial) {
  const UPoly p = characteristic_polynomial(ad_matrix(catalog("oscillator"), vec({1, 0, 0, 0})));
  EXPECT_EQ(p, UPoly(RatVec{Rat(0), Rat(0), Rat(1), Rat(0), Rat(1)}));  // λ²(λ²+1)
}

TEST(Exponentiality, ImaginaryRootDetection) {
  EXPECT_TRUE(has_nonzero_imaginary_root(UPoly(RatVec{Rat(4), Rat(0), Rat(1)})));           // λ²+4
  EXPECT_FALSE(has_nonzero_imaginary_root(UPoly(RatVec{Rat(-4), Rat(0), Rat(1)})));         // λ²-4
  EXPECT_FALSE(has_nonzero_imaginary_root(UPoly(RatVec{Rat(0), Rat(0), Rat(1)})));          // λ²
  EXPECT_FALSE(has_nonzero_imaginary_root(UPoly(RatVec{Rat(2), Rat(2), Rat(1)})));          // roots -1±i
  EXPECT_TRUE(has_nonzero_imaginary_root(UPoly(RatVec{Rat(3), Rat(-1), Rat(3), Rat(-1)}))); // (λ²+1)(3-λ)
}

TEST(Exponentiality, HeuristicYesOnExponentialEntriesAndDeterministic) {
  for (const auto& L : {catalog("axb"), catalog("heisenberg", "2"), catalog("filiform", "5"), catalog("grelaud", "1"),
                        catalog("abelian", "2"), catalog_spec("axb+heisenberg:1")}) {
    const auto a = exponentiality_check(L, 0, 50);
    EXPECT_EQ(a.status, ExpStatus::heuristic_yes);
    EXPECT_FALSE(a.witness);
    const auto b = exponentiality_check(L, 0, 50);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.seed, 0u);
    EXPECT_EQ(a.trials, 50u);
  }
}

TEST(Exponentiality, GrelaudZeroRotationFreeOtherwiseNot) {
  // grelaud(θ): ad A has eigenvalues 1 ± iθ, never purely imaginary.
  EXPECT_EQ(exponentiality_check(catalog("grelaud", "3"), 7, 20).status, ExpStatus::heuristic_yes);
}

TEST(Exponentiality, RejectsNonSolvable) { EXPECT_THROW(exponentiality_check(catalog("sl2"), 0, 5), LieError); }

TEST(Catalog, ShapesAndErrors) {
  EXPECT_EQ(catalog("heisenberg", "1").dim(), 3u);
  EXPECT_EQ(catalog("heisenberg", "1").constants().size(), 1u);
  EXPECT_EQ(catalog("heisenberg", "2").dim(), 5u);
  EXPECT_EQ(catalog("filiform", "5").constants().size(), 3u);
  EXPECT_THROW(catalog("nonsense"), LieError);
  EXPECT_THROW(catalog("filiform", "2"), LieError);
  EXPECT_THROW(catalog("heisenberg", "x"), LieError);
  EXPECT_THROW(catalog_spec("axb+"), LieError);
  const LieAlgebra s = catalog_spec("axb+axb");
  EXPECT_EQ(s.basis_names(), (std::vector<std::string>{"X1", "Y1", "X2", "Y2"}));
  EXPECT_EQ(s.bracket_basis(2, 3), vec({0, 0, 0, 1}));
  EXPECT_EQ(s.bracket_basis(3, 2), vec({0, 0, 0, -1}));
}

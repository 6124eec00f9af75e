#include "orbit_rank/lie_algebra.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "orbit_rank/sturm.hpp"

namespace orbit_rank {

namespace {

using ConstantMap = std::map<std::pair<std::size_t, std::size_t>, RatVec>;

// Folds a raw table into j<k form, checking ranges and lengths.
ConstantMap fold_constants(const BracketTable& raw) {
  ConstantMap out;
  for (const auto& [key, vec] : raw.brackets) {
    auto [j, k] = key;
    if (j >= raw.dim || k >= raw.dim) {
      throw IndexOutOfRange("bracket index (" + std::to_string(j) + "," + std::to_string(k) +
                            ") out of range for dimension " + std::to_string(raw.dim));
    }
    if (vec.size() != raw.dim) {
      throw IndexOutOfRange("bracket vector for (" + std::to_string(j) + "," + std::to_string(k) + ") has length " +
                            std::to_string(vec.size()) + ", expected " + std::to_string(raw.dim));
    }
    bool nonzero = std::any_of(vec.begin(), vec.end(), [](const Rat& x) { return !is_zero(x); });
    if (j == k) {
      if (nonzero) throw LieError("bracket of basis element " + std::to_string(j) + " with itself must vanish");
      continue;
    }
    if (j < k && raw.brackets.count({k, j})) {
      throw LieError("bracket (" + std::to_string(j) + "," + std::to_string(k) + ") given in both orders");
    }
    RatVec v = vec;
    if (j > k) {
      std::swap(j, k);
      for (auto& x : v) x = -x;
    }
    if (nonzero) out[{j, k}] = std::move(v);
  }
  return out;
}

RatVec lookup(const ConstantMap& c, std::size_t dim, std::size_t j, std::size_t k) {
  if (j == k) return RatVec(dim);
  bool flip = j > k;
  auto it = c.find(flip ? std::make_pair(k, j) : std::make_pair(j, k));
  if (it == c.end()) return RatVec(dim);
  RatVec v = it->second;
  if (flip) {
    for (auto& x : v) x = -x;
  }
  return v;
}

// [x, X_k] for a coordinate vector x.
RatVec bracket_with_basis(const ConstantMap& c, std::size_t dim, const RatVec& x, std::size_t k) {
  RatVec out(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    if (is_zero(x[j])) continue;
    RatVec b = lookup(c, dim, j, k);
    for (std::size_t l = 0; l < dim; ++l) out[l] += x[j] * b[l];
  }
  return out;
}

RatVec jacobi_residual_folded(const ConstantMap& c, std::size_t dim, std::size_t i, std::size_t j, std::size_t k) {
  RatVec out(dim);
  auto add = [&](std::size_t a, std::size_t b, std::size_t d) {
    RatVec v = bracket_with_basis(c, dim, lookup(c, dim, a, b), d);
    for (std::size_t l = 0; l < dim; ++l) out[l] += v[l];
  };
  add(i, j, k);
  add(j, k, i);
  add(k, i, j);
  return out;
}

std::string vec_to_string(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v[i]);
  os << ")";
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------- LieAlgebra

RatVec LieAlgebra::bracket_basis(std::size_t j, std::size_t k) const {
  if (j >= dim() || k >= dim()) throw IndexOutOfRange("basis index out of range");
  return lookup(constants_, dim(), j, k);
}

RatVec LieAlgebra::bracket(const RatVec& x, const RatVec& y) const {
  if (x.size() != dim() || y.size() != dim()) throw std::invalid_argument("bracket operand has wrong length");
  RatVec out(dim());
  for (const auto& [key, v] : constants_) {
    auto [j, k] = key;
    Rat w = x[j] * y[k] - x[k] * y[j];
    if (is_zero(w)) continue;
    for (std::size_t l = 0; l < dim(); ++l) out[l] += w * v[l];
  }
  return out;
}

RatVec LieAlgebra::basis_vector(std::size_t i) const {
  RatVec v(dim());
  v.at(i) = 1;
  return v;
}

LieAlgebra validate(const BracketTable& raw) {
  if (raw.names.size() != raw.dim) {
    throw IndexOutOfRange("expected " + std::to_string(raw.dim) + " basis names, got " +
                          std::to_string(raw.names.size()));
  }
  std::set<std::string> seen;
  for (const auto& n : raw.names) {
    if (n.empty()) throw LieError("empty basis name");
    if (!seen.insert(n).second) throw DuplicateBasisName("duplicate basis name '" + n + "'");
  }
  ConstantMap c = fold_constants(raw);
  for (std::size_t i = 0; i < raw.dim; ++i) {
    for (std::size_t j = i + 1; j < raw.dim; ++j) {
      for (std::size_t k = j + 1; k < raw.dim; ++k) {
        RatVec res = jacobi_residual_folded(c, raw.dim, i, j, k);
        if (std::any_of(res.begin(), res.end(), [](const Rat& x) { return !is_zero(x); })) {
          throw JacobiViolation(i, j, k, res,
                                "Jacobi identity fails on (" + raw.names[i] + ", " + raw.names[j] + ", " +
                                    raw.names[k] + "): residual " + vec_to_string(res));
        }
      }
    }
  }
  LieAlgebra L;
  L.names_ = raw.names;
  L.constants_ = std::move(c);
  return L;
}

RatVec jacobi_residual(const BracketTable& raw, std::size_t i, std::size_t j, std::size_t k) {
  return jacobi_residual_folded(fold_constants(raw), raw.dim, i, j, k);
}

BracketTable to_table(const LieAlgebra& L) {
  BracketTable t;
  t.dim = L.dim();
  t.names = L.basis_names();
  t.brackets = L.constants();
  return t;
}

// ---------------------------------------------------------------- structure

Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
  std::vector<RatVec> vectors;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    RatVec x = a.vector(i);
    for (std::size_t j = 0; j < b.dim(); ++j) {
      RatVec v = L.bracket(x, b.vector(j));
      if (std::any_of(v.begin(), v.end(), [](const Rat& q) { return !is_zero(q); })) vectors.push_back(std::move(v));
    }
  }
  return Subspace::span(L.dim(), vectors);
}

std::vector<Subspace> derived_series(const LieAlgebra& L) {
  std::vector<Subspace> series{Subspace::full(L.dim())};
  while (true) {
    Subspace next = bracket_span(L, series.back(), series.back());
    const bool stable = next == series.back();
    if (!stable || next.dim() != 0) series.push_back(std::move(next));
    if (stable) break;
  }
  return series;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& L) {
  const Subspace g = Subspace::full(L.dim());
  std::vector<Subspace> series{g};
  while (true) {
    Subspace next = bracket_span(L, g, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const LieAlgebra& L) { return derived_series(L).back().dim() == 0; }
bool is_nilpotent(const LieAlgebra& L) { return lower_central_series(L).back().dim() == 0; }
bool is_abelian(const LieAlgebra& L) { return L.constants().empty(); }

std::size_t abelianization_dim(const LieAlgebra& L) {
  const Subspace g = Subspace::full(L.dim());
  return L.dim() - bracket_span(L, g, g).dim();
}

Subspace annihilator_of_derived(const LieAlgebra& L) {
  const Subspace g = Subspace::full(L.dim());
  return bracket_span(L, g, g).annihilator();
}

Subspace center(const LieAlgebra& L) {
  // x is central iff [x, X_k] = 0 for all k: stack the ad(X_k) rows.
  const std::size_t n = L.dim();
  Mat m(n * n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      RatVec b = L.bracket_basis(j, k);
      for (std::size_t l = 0; l < n; ++l) m(k * n + l, j) = b[l];
    }
  }
  return kernel_basis(m);
}

StructureReport analyze_structure(const LieAlgebra& L) {
  StructureReport r;
  for (const auto& s : derived_series(L)) r.derived_series_dims.push_back(s.dim());
  for (const auto& s : lower_central_series(L)) r.lower_central_series_dims.push_back(s.dim());
  r.solvable = r.derived_series_dims.back() == 0;
  r.nilpotent = r.lower_central_series_dims.back() == 0;
  r.abelianization_dim = L.dim() - (r.derived_series_dims.size() > 1 ? r.derived_series_dims[1] : L.dim());
  r.center_dim = center(L).dim();
  return r;
}

Mat ad_matrix(const LieAlgebra& L, const RatVec& x) {
  if (x.size() != L.dim()) {
    throw std::invalid_argument("ad_matrix: vector of length " + std::to_string(x.size()) + " for dimension " +
                                std::to_string(L.dim()));
  }
  const std::size_t n = L.dim();
  Mat m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    RatVec col = L.bracket(x, L.basis_vector(k));
    for (std::size_t l = 0; l < n; ++l) m(l, k) = col[l];
  }
  return m;
}

UPoly characteristic_polynomial(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  RatVec c(n + 1);
  c[n] = 1;
  Mat m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Mat next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    Mat am = a * m;
    Rat trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / static_cast<unsigned long>(k);
  }
  return UPoly(std::move(c));
}

bool has_nonzero_imaginary_root(const UPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero characteristic polynomial");
  // p(iμ) = re(μ) + i·im(μ) with i^k cycling through 1, i, -1, -i.
  RatVec re(p.coeffs().size()), im(p.coeffs().size());
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const Rat& a = p.coeffs()[k];
    switch (k % 4) {
      case 0: re[k] = a; break;
      case 1: im[k] = a; break;
      case 2: re[k] = -a; break;
      default: im[k] = -a; break;
    }
  }
  UPoly g = gcd(UPoly(std::move(re)), UPoly(std::move(im)));
  if (g.degree() <= 0) return false;
  while (is_zero(g.coeff(0))) g = divmod(g, UPoly::monomial(Rat(1), 1)).first;
  if (g.degree() <= 0) return false;
  return real_root_count(g) > 0;
}

// ---------------------------------------------------------------- exponentiality

std::string to_string(ExpStatus s) {
  switch (s) {
    case ExpStatus::certified_no: return "certified_no";
    case ExpStatus::heuristic_yes: return "heuristic_yes";
    case ExpStatus::asserted: return "asserted";
  }
  return "unknown";
}

ExponentialityVerdict exponentiality_check(const LieAlgebra& L, std::uint64_t seed, std::size_t trials) {
  if (!is_solvable(L)) throw LieError("exponentiality screen requires a solvable algebra");
  ExponentialityVerdict verdict;
  verdict.seed = seed;
  verdict.trials = trials;
  auto test = [&](const RatVec& x) {
    if (!has_nonzero_imaginary_root(characteristic_polynomial(ad_matrix(L, x)))) return false;
    verdict.status = ExpStatus::certified_no;
    verdict.witness = x;
    return true;
  };
  for (std::size_t i = 0; i < L.dim(); ++i) {
    if (test(L.basis_vector(i))) return verdict;
  }
  // Raw engine output keeps the draws identical across standard libraries.
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    RatVec x(L.dim());
    for (auto& q : x) {
      auto num = static_cast<std::int64_t>(rng() % 21) - 10;
      auto den = static_cast<std::int64_t>(rng() % 4) + 1;
      q = make_rat(num, den);
    }
    if (test(x)) return verdict;
  }
  verdict.status = ExpStatus::heuristic_yes;
  return verdict;
}

ExponentialityVerdict asserted_exponential() {
  ExponentialityVerdict v;
  v.status = ExpStatus::asserted;
  return v;
}

// ---------------------------------------------------------------- catalog

namespace {

class TableBuilder {
 public:
  explicit TableBuilder(std::vector<std::string> names) {
    table_.dim = names.size();
    table_.names = std::move(names);
  }
  TableBuilder& set(std::size_t j, std::size_t k, std::vector<std::pair<Rat, std::size_t>> terms) {
    RatVec v(table_.dim);
    for (auto& [c, l] : terms) v.at(l) += c;
    table_.brackets[{j, k}] = std::move(v);
    return *this;
  }
  LieAlgebra build() const { return validate(table_); }

 private:
  BracketTable table_;
};

std::size_t parse_count(const std::string& name, const std::string& params, std::size_t min) {
  if (params.empty()) throw LieError(name + " needs a parameter");
  std::size_t n = 0;
  for (char ch : params) {
    if (ch < '0' || ch > '9') throw LieError("invalid parameter '" + params + "' for " + name);
    n = n * 10 + static_cast<std::size_t>(ch - '0');
    if (n > 64) throw LieError("parameter for " + name + " exceeds 64");
  }
  if (n < min) throw LieError(name + " needs a parameter >= " + std::to_string(min));
  return n;
}

void require_no_params(const std::string& name, const std::string& params) {
  if (!params.empty()) throw LieError(name + " takes no parameters");
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"abelian", "n>=1", "abelian algebra R^n, no brackets"},
      {"axb", "", "[X,Y]=Y"},
      {"heisenberg", "m>=1", "[P_i,Q_i]=Z, dimension 2m+1"},
      {"filiform", "n>=3", "[e1,e_i]=e_{i+1} for 2<=i<=n-1"},
      {"grelaud", "theta (rational)", "[A,X]=X-theta*Y, [A,Y]=theta*X+Y"},
      {"oscillator", "", "[H,P]=Q, [H,Q]=-P, [P,Q]=E"},
      {"e2", "", "[H,P]=Q, [H,Q]=-P"},
      {"sl2", "", "[H,E]=2E, [H,F]=-2F, [E,F]=H"},
  };
  return entries;
}

LieAlgebra catalog(const std::string& name, const std::string& params) {
  if (name == "abelian") {
    std::size_t n = parse_count(name, params, 1);
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
    return TableBuilder(names).build();
  }
  if (name == "axb") {
    require_no_params(name, params);
    return TableBuilder({"X", "Y"}).set(0, 1, {{1, 1}}).build();
  }
  if (name == "heisenberg") {
    std::size_t m = parse_count(name, params, 1);
    std::vector<std::string> names;
    if (m == 1) {
      names = {"P", "Q", "Z"};
    } else {
      for (std::size_t i = 1; i <= m; ++i) names.push_back("P" + std::to_string(i));
      for (std::size_t i = 1; i <= m; ++i) names.push_back("Q" + std::to_string(i));
      names.push_back("Z");
    }
    TableBuilder b(names);
    for (std::size_t i = 0; i < m; ++i) b.set(i, m + i, {{1, 2 * m}});
    return b.build();
  }
  if (name == "filiform") {
    std::size_t n = parse_count(name, params, 3);
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
    TableBuilder b(names);
    for (std::size_t i = 1; i + 1 < n; ++i) b.set(0, i, {{1, i + 1}});
    return b.build();
  }
  if (name == "grelaud") {
    Rat theta;
    try {
      theta = parse_rat(params);
    } catch (const std::invalid_argument&) {
      throw LieError("grelaud needs a rational parameter, got '" + params + "'");
    }
    return TableBuilder({"A", "X", "Y"}).set(0, 1, {{1, 1}, {-theta, 2}}).set(0, 2, {{theta, 1}, {1, 2}}).build();
  }
  if (name == "oscillator") {
    require_no_params(name, params);
    return TableBuilder({"H", "P", "Q", "E"}).set(0, 1, {{1, 2}}).set(0, 2, {{-1, 1}}).set(1, 2, {{1, 3}}).build();
  }
  if (name == "e2") {
    require_no_params(name, params);
    return TableBuilder({"H", "P", "Q"}).set(0, 1, {{1, 2}}).set(0, 2, {{-1, 1}}).build();
  }
  if (name == "sl2") {
    require_no_params(name, params);
    return TableBuilder({"H", "E", "F"}).set(0, 1, {{2, 1}}).set(0, 2, {{-2, 2}}).set(1, 2, {{1, 0}}).build();
  }
  throw LieError("unknown catalog algebra '" + name + "'");
}

LieAlgebra catalog_spec(const std::string& spec) {
  std::optional<LieAlgebra> acc;
  std::size_t start = 0;
  while (true) {
    std::size_t plus = spec.find('+', start);
    std::string part = spec.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    if (part.empty()) throw LieError("empty summand in catalog spec '" + spec + "'");
    std::string name = part, params;
    if (auto colon = part.find(':'); colon != std::string::npos) {
      name = part.substr(0, colon);
      params = part.substr(colon + 1);
    }
    LieAlgebra summand = catalog(name, params);
    acc = acc ? direct_sum(*acc, summand) : summand;
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return *acc;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<std::string> names_a = a.basis_names();
  std::vector<std::string> names_b = b.basis_names();
  std::set<std::string> sa(names_a.begin(), names_a.end());
  bool collide = std::any_of(names_b.begin(), names_b.end(), [&](const auto& n) { return sa.count(n) > 0; });
  if (collide) {
    for (auto& n : names_a) n += "1";
    for (auto& n : names_b) n += "2";
  }
  BracketTable t;
  t.dim = a.dim() + b.dim();
  t.names = names_a;
  t.names.insert(t.names.end(), names_b.begin(), names_b.end());
  for (const auto& [key, v] : a.constants()) {
    RatVec w(t.dim);
    std::copy(v.begin(), v.end(), w.begin());
    t.brackets[key] = std::move(w);
  }
  for (const auto& [key, v] : b.constants()) {
    RatVec w(t.dim);
    std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(a.dim()));
    t.brackets[{key.first + a.dim(), key.second + a.dim()}] = std::move(w);
  }
  return validate(t);
}

}  // namespace orbit_rank

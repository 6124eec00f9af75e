#include "orbit_rank/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orbit_rank {

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(RatVec coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rat& c) { return UPoly(RatVec{c}); }

UPoly UPoly::monomial(const Rat& c, std::size_t degree) {
  RatVec v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::linear_factor(const Rat& root) { return UPoly(RatVec{-root, Rat(1)}); }

void UPoly::trim() {
  while (!coeffs_.empty() && orbit_rank::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rat UPoly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  RatVec d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return UPoly(std::move(d));
}

UPoly UPoly::primitive() const {
  if (is_zero()) return {};
  Int lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> ints(coeffs_.size());
  Int g = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    ints[k] = coeffs_[k].get_num() * (lcm / coeffs_[k].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[k].get_mpz_t());
  }
  RatVec out(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] = Rat(ints[k] / g);
  return UPoly(std::move(out));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return (Rat(1) / leading()) * *this;
}

UPoly UPoly::operator-() const { return Rat(-1) * *this; }

UPoly operator+(const UPoly& a, const UPoly& b) {
  RatVec out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
  return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RatVec out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (orbit_rank::is_zero(a.coeffs_[i])) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(out));
}

UPoly operator*(const Rat& c, const UPoly& a) {
  if (orbit_rank::is_zero(c)) return {};
  RatVec out = a.coeffs_;
  for (auto& x : out) x *= c;
  return UPoly(std::move(out));
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rat& c = coeffs_[k];
    if (orbit_rank::is_zero(c)) continue;
    Rat mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << orbit_rank::to_string(mag);
      continue;
    }
    if (mag != 1) os << orbit_rank::to_string(mag) << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly{}, a};
  RatVec rem = a.coeffs();
  RatVec quot(a.coeffs().size() - b.coeffs().size() + 1);
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const Rat& lead = b.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rat q = rem[k + db] / lead;
    quot[k] = q;
    if (orbit_rank::is_zero(q)) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
  }
  rem.resize(db);
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.primitive();
  }
  return x.monic();
}

// ---------------------------------------------------------------- MPoly

MPoly MPoly::constant(std::size_t nvars, const Rat& c) {
  MPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  MPoly p(nvars);
  Exponent e(nvars, 0);
  e[index] = 1;
  p.add_term(e, Rat(1));
  return p;
}

MPoly MPoly::linear(std::span<const Rat> coeffs) {
  MPoly p(coeffs.size());
  for (std::size_t l = 0; l < coeffs.size(); ++l) {
    if (orbit_rank::is_zero(coeffs[l])) continue;
    Exponent e(coeffs.size(), 0);
    e[l] = 1;
    p.add_term(e, coeffs[l]);
  }
  return p;
}

int MPoly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto x : e) d += static_cast<int>(x);
    best = std::max(best, d);
  }
  return best;
}

void MPoly::add_term(const Exponent& e, const Rat& c) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent vector length mismatch");
  if (orbit_rank::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (orbit_rank::is_zero(it->second)) terms_.erase(it);
}

Rat MPoly::evaluate(std::span<const Rat> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong length");
  Rat acc = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t l = 0; l < nvars_ && !orbit_rank::is_zero(t); ++l) {
      for (std::uint32_t k = 0; k < e[l]; ++k) t *= point[l];
    }
    acc += t;
  }
  return acc;
}

UPoly MPoly::restrict_to_line(std::span<const Rat> base, std::span<const Rat> direction) const {
  if (base.size() != nvars_ || direction.size() != nvars_) {
    throw std::invalid_argument("line has wrong length");
  }
  // Powers of each affine coordinate base_l + t*direction_l, built lazily.
  std::vector<std::vector<UPoly>> powers(nvars_);
  auto power = [&](std::size_t l, std::uint32_t k) -> const UPoly& {
    auto& cache = powers[l];
    if (cache.empty()) cache.push_back(UPoly::constant(Rat(1)));
    while (cache.size() <= k) cache.push_back(cache.back() * UPoly(RatVec{base[l], direction[l]}));
    return cache[k];
  };
  UPoly acc;
  for (const auto& [e, c] : terms_) {
    UPoly t = UPoly::constant(c);
    for (std::size_t l = 0; l < nvars_; ++l) {
      if (e[l] != 0) t = t * power(l, e[l]);
    }
    acc = acc + t;
  }
  return acc;
}

MPoly MPoly::operator-() const { return Rat(-1) * *this; }

MPoly& MPoly::operator+=(const MPoly& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  out += b;
  return out;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  MPoly out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t l = 0; l < a.nvars_; ++l) e[l] = ea[l] + eb[l];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MPoly operator*(const Rat& c, const MPoly& a) {
  MPoly out(a.nvars_);
  if (orbit_rank::is_zero(c)) return out;
  out.terms_ = a.terms_;
  for (auto& [e, x] : out.terms_) x *= c;
  return out;
}

namespace {

bool grlex_greater(const Exponent& a, const Exponent& b) {
  unsigned da = 0, db = 0;
  for (auto x : a) da += x;
  for (auto x : b) db += x;
  if (da != db) return da > db;
  return a > b;
}

}  // namespace

std::string MPoly::to_string(std::span<const std::string> names) const {
  if (names.size() != nvars_) throw std::invalid_argument("variable name count mismatch");
  if (is_zero()) return "0";
  std::vector<const std::pair<const Exponent, Rat>*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* x, auto* y) { return grlex_greater(x->first, y->first); });

  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    Rat mag = abs(c);
    bool constant_term = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    if (constant_term) {
      os << orbit_rank::to_string(mag);
      continue;
    }
    bool need_star = false;
    if (mag != 1) {
      os << orbit_rank::to_string(mag);
      need_star = true;
    }
    for (std::size_t l = 0; l < nvars_; ++l) {
      if (e[l] == 0) continue;
      if (need_star) os << "*";
      os << names[l];
      if (e[l] > 1) os << "^" << e[l];
      need_star = true;
    }
  }
  return os.str();
}

std::string MPoly::to_string() const {
  std::vector<std::string> names(nvars_);
  for (std::size_t l = 0; l < nvars_; ++l) names[l] = "x" + std::to_string(l + 1);
  return to_string(names);
}

bool PolyMatrix::is_skew() const {
  for (std::size_t r = 0; r < n_; ++r) {
    if (!(*this)(r, r).is_zero()) return false;
    for (std::size_t c = r + 1; c < n_; ++c) {
      if (!((*this)(r, c) + (*this)(c, r)).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace orbit_rank

#include "orbit_rank/sturm.hpp"

#include <algorithm>

namespace orbit_rank {

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
  UPoly sqfree = p;
  if (UPoly g = gcd(p, p.derivative()); g.degree() > 0) sqfree = divmod(p, g).first;
  std::vector<UPoly> seq;
  seq.push_back(sqfree.primitive());
  UPoly d = seq.front().derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d.primitive());
  while (true) {
    UPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back((-r).primitive());
  }
  return seq;
}

namespace {

// Sign changes of the sequence evaluated at x, zeros skipped.
std::size_t sign_changes_at(const std::vector<UPoly>& seq, const Rat& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& q : seq) {
    int s = sgn(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Sign changes at ±infinity follow the leading coefficients.
std::size_t sign_changes_at_infinity(const std::vector<UPoly>& seq, bool positive) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& q : seq) {
    int s = sgn(q.leading());
    if (!positive && q.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t sturm_root_count(const UPoly& p, const Rat& lo, const Rat& hi) {
  if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial is unbounded");
  if (!(lo < hi)) throw std::invalid_argument("root count needs lo < hi");
  auto seq = sturm_sequence(p);
  // Sturm's theorem counts roots in the half-open interval (lo, hi].
  std::size_t count = sign_changes_at(seq, lo) - sign_changes_at(seq, hi);
  if (is_zero(p(hi))) --count;
  return count;
}

std::size_t real_root_count(const UPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial is unbounded");
  auto seq = sturm_sequence(p);
  return sign_changes_at_infinity(seq, false) - sign_changes_at_infinity(seq, true);
}

Rat cauchy_bound(const UPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root bound of the zero polynomial");
  Rat best = 0;
  for (int k = 0; k < p.degree(); ++k) best = std::max(best, Rat(abs(p.coeff(static_cast<std::size_t>(k)) / p.leading())));
  return best + 2;
}

}  // namespace orbit_rank

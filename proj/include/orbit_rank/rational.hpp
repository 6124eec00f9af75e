#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace orbit_rank {

/// Arbitrary-precision rational. GMP keeps every value canonical (lowest
/// terms, positive denominator) after each arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;
using RatVec = std::vector<Rat>;

/// Canonical rendering: `p/q` in lowest terms, integers without `/1`.
std::string to_string(const Rat& value);

/// Parses `p`, `-p`, `p/q`, or `+p/q`. Throws std::invalid_argument on
/// malformed text or a zero denominator.
Rat parse_rat(std::string_view text);

inline bool is_zero(const Rat& value) { return sgn(value) == 0; }

inline Rat make_rat(std::int64_t num, std::int64_t den = 1) {
  Rat r(Int(static_cast<long>(num)), Int(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

}  // namespace orbit_rank

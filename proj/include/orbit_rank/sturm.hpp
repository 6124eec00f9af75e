#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "orbit_rank/polynomial.hpp"

namespace orbit_rank {

/// Signed remainder sequence of the squarefree part q of p:
/// q, q', -rem(q, q'), ... with positive content removed at every step.
std::vector<UPoly> sturm_sequence(const UPoly& p);

/// Number of distinct real roots of p strictly inside (lo, hi).
/// Throws std::invalid_argument for the zero polynomial or lo >= hi.
std::size_t sturm_root_count(const UPoly& p, const Rat& lo, const Rat& hi);

/// Number of distinct real roots of p on the whole line.
std::size_t real_root_count(const UPoly& p);

/// Rational B with every real root of p in (-B, B) (Cauchy bound + 1).
Rat cauchy_bound(const UPoly& p);

}  // namespace orbit_rank

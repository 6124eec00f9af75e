#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "orbit_rank/lie_algebra.hpp"
#include "orbit_rank/matrix.hpp"
#include "orbit_rank/polynomial.hpp"

namespace orbit_rank {

/// A functional ξ in g*, in dual-basis coordinates.
struct CoadjointPoint {
  RatVec coords;
};

struct OrbitPointData {
  std::size_t orbit_dim = 0;
  Subspace isotropy{0};
  bool open = false;
};

/// An edge of the certificate graph: P restricted to the segment between the
/// two samples has no root in (0, 1), so both lie in one component of {P ≠ 0}.
struct CertificateEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  bool segment_root_free = true;
};

struct ComponentEstimate {
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;
  std::size_t component_count = 0;
  std::vector<CoadjointPoint> samples;
  std::vector<CertificateEdge> certificates;
  /// Component label per sample, labels numbered by first appearance.
  std::vector<std::size_t> component_of;
};

/// Dual-basis coordinate names, `xi_<basisname>`.
std::vector<std::string> dual_names(const LieAlgebra& L);

/// B_ξ: entry (j, k) is ⟨ξ, [X_j, X_k]⟩ = Σ_l c_{jk}^l ξ_l.
PolyMatrix b_matrix_sym(const LieAlgebra& L);
/// B_ξ evaluated at one point.
Mat b_matrix_at(const LieAlgebra& L, const CoadjointPoint& xi);

/// Pf(B_ξ); zero for odd dimension.
MPoly pfaffian_polynomial(const LieAlgebra& L);
/// P(ξ) = det B_ξ = Pf(B_ξ)^2.
MPoly p_polynomial(const LieAlgebra& L);
bool has_open_orbits(const LieAlgebra& L);

OrbitPointData orbit_data_at(const LieAlgebra& L, const CoadjointPoint& xi);

/// Draws `samples` points with P ≠ 0 from [-10, 10]^dim (denominators ≤ 64)
/// and joins two of them when the segment between them avoids {P = 0}.
/// Every edge is exact, so the count never undercounts the open orbits the
/// samples reach. Pairs already known to be connected are not retested.
ComponentEstimate estimate_open_orbit_components(const LieAlgebra& L, std::size_t samples, std::uint64_t seed);

}  // namespace orbit_rank

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "orbit_rank/coadjoint.hpp"
#include "orbit_rank/lie_algebra.hpp"

namespace orbit_rank {

/// Why a closed-form invariant was refused.
enum class RefusalKind { not_exponential, not_simply_connected, not_solvable };

std::string to_string(RefusalKind k);

class RefusalError : public LieError {
 public:
  RefusalError(RefusalKind kind, const std::string& what, std::optional<RatVec> witness = std::nullopt)
      : LieError(what), kind_(kind), witness_(std::move(witness)) {}
  RefusalKind kind() const { return kind_; }
  const std::optional<RatVec>& witness() const { return witness_; }

 private:
  RefusalKind kind_;
  std::optional<RatVec> witness_;
};

struct GroupFlags {
  bool simply_connected = true;
  ExponentialityVerdict exponentiality;
};

/// Throws RefusalError unless L is solvable, G is simply connected and the
/// exponentiality verdict is not certified_no.
void require_closed_form_hypotheses(const LieAlgebra& L, const GroupFlags& flags);

/// RR(C*(G)) = dim g/[g,g] for simply connected exponential G.
std::size_t real_rank(const LieAlgebra& L, const GroupFlags& flags);

/// tsr(C*(G)): 1 when dim g = 1 (G = R), otherwise 1 + max(floor(r/2), 1).
std::size_t stable_rank(const LieAlgebra& L, const GroupFlags& flags);

struct RealRankBound {
  std::size_t value = 0;
  /// Always true: the bound can be strict (the circle group has RR 0 < 1).
  bool possibly_strict = true;
};

/// Upper bound for a connected G whose universal cover is exponential.
/// `cover_exponentiality` describes the cover (which shares the Lie algebra).
RealRankBound rr_upper_bound_nonsimply_connected(const LieAlgebra& L,
                                                 const ExponentialityVerdict& cover_exponentiality);

enum class ProjectionStatus { none_nilpotent, exists_open_orbits, unknown };

std::string to_string(ProjectionStatus s);

struct EstimatorParams {
  std::size_t samples = 200;
  std::uint64_t seed = 0;
};

struct ProjectionVerdict {
  ProjectionStatus verdict = ProjectionStatus::unknown;
  /// Gr(C*(G)) = Gr(J_0), J_0 the intersection of the character kernels.
  bool gr_equals_J0 = true;
  /// J_0 is a proper ideal.
  bool J0_proper = false;
  /// Number of open coadjoint orbits seen by the estimator; the projection
  /// ideal then contains that many copies of the compacts.
  std::optional<std::size_t> open_orbit_count_estimate;
  std::optional<ComponentEstimate> estimate;
};

ProjectionVerdict projection_verdict(const LieAlgebra& L, const GroupFlags& flags, const EstimatorParams& params);

}  // namespace orbit_rank

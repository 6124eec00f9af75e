#include "orbit_rank/invariants.hpp"

#include <algorithm>

namespace orbit_rank {

std::string to_string(RefusalKind k) {
  switch (k) {
    case RefusalKind::not_exponential: return "NotExponential";
    case RefusalKind::not_simply_connected: return "NotSimplyConnected";
    case RefusalKind::not_solvable: return "NotSolvable";
  }
  return "Unknown";
}

std::string to_string(ProjectionStatus s) {
  switch (s) {
    case ProjectionStatus::none_nilpotent: return "none_nilpotent";
    case ProjectionStatus::exists_open_orbits: return "exists_open_orbits";
    case ProjectionStatus::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

void require_solvable_exponential(const LieAlgebra& L, const ExponentialityVerdict& verdict) {
  if (!is_solvable(L)) {
    throw RefusalError(RefusalKind::not_solvable, "algebra is not solvable, so no exponential group integrates it");
  }
  if (verdict.status == ExpStatus::certified_no) {
    throw RefusalError(RefusalKind::not_exponential,
                       "ad(X) has a nonzero purely imaginary eigenvalue for the witness X", verdict.witness);
  }
}

}  // namespace

void require_closed_form_hypotheses(const LieAlgebra& L, const GroupFlags& flags) {
  require_solvable_exponential(L, flags.exponentiality);
  if (!flags.simply_connected) {
    throw RefusalError(RefusalKind::not_simply_connected,
                       "group is not simply connected; only the universal-cover upper bound applies");
  }
}

std::size_t real_rank(const LieAlgebra& L, const GroupFlags& flags) {
  require_closed_form_hypotheses(L, flags);
  return abelianization_dim(L);
}

std::size_t stable_rank(const LieAlgebra& L, const GroupFlags& flags) {
  require_closed_form_hypotheses(L, flags);
  if (L.dim() == 1) return 1;
  const std::size_t r = abelianization_dim(L);
  return 1 + std::max<std::size_t>(r / 2, 1);
}

RealRankBound rr_upper_bound_nonsimply_connected(const LieAlgebra& L,
                                                 const ExponentialityVerdict& cover_exponentiality) {
  require_solvable_exponential(L, cover_exponentiality);
  return {abelianization_dim(L), true};
}

ProjectionVerdict projection_verdict(const LieAlgebra& L, const GroupFlags& flags, const EstimatorParams& params) {
  require_closed_form_hypotheses(L, flags);
  ProjectionVerdict v;
  v.gr_equals_J0 = true;
  v.J0_proper = L.dim() > 0;
  if (is_nilpotent(L)) {
    v.verdict = ProjectionStatus::none_nilpotent;
  } else if (has_open_orbits(L)) {
    v.verdict = ProjectionStatus::exists_open_orbits;
    v.estimate = estimate_open_orbit_components(L, params.samples, params.seed);
    v.open_orbit_count_estimate = v.estimate->component_count;
  } else {
    v.verdict = ProjectionStatus::unknown;
  }
  return v;
}

}  // namespace orbit_rank

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "orbit_rank/lie_algebra.hpp"

namespace orbit_rank {

struct AnalyzeOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  /// Random trials for the exponentiality screen.
  std::size_t exp_trials = 50;
  bool assume_exponential = false;
  bool simply_connected = true;
};

enum ExitCode : int { exit_ok = 0, exit_input_error = 1, exit_refusal = 2 };

/// Full report with keys algebra, structure, exponentiality, invariants,
/// coadjoint, projections and inference. Sections whose hypotheses fail hold
/// `{"refused": {"reason": ..., "witness": ...}}` instead.
struct AnalysisReport {
  nlohmann::ordered_json json;
  /// exit_refusal when any section was refused.
  int exit_code = exit_ok;
};

AnalysisReport analyze(const LieAlgebra& L, const AnalyzeOptions& options);

/// Witness vector as a combination of basis names, e.g. `H` or `1/2 X + -1 Y`.
std::string render_combination(const LieAlgebra& L, const RatVec& v);

/// Deterministic JSON text (two-space indent, trailing newline).
std::string dump_report(const AnalysisReport& report);

/// Plain-text rendering of the same content.
std::string render_report(const AnalysisReport& report);

}  // namespace orbit_rank

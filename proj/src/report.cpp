#include "orbit_rank/report.hpp"

#include <sstream>

#include "orbit_rank/coadjoint.hpp"
#include "orbit_rank/filtration_io.hpp"
#include "orbit_rank/inference.hpp"
#include "orbit_rank/invariants.hpp"

namespace orbit_rank {

using nlohmann::ordered_json;

namespace {

ordered_json vector_json(const RatVec& v) {
  ordered_json out = ordered_json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

ordered_json refused(const LieAlgebra& L, const RefusalError& e) {
  ordered_json r;
  r["reason"] = to_string(e.kind());
  r["message"] = e.what();
  if (e.witness()) r["witness"] = render_combination(L, *e.witness());
  return ordered_json{{"refused", r}};
}

ordered_json algebra_json(const LieAlgebra& L) {
  ordered_json a;
  a["dim"] = L.dim();
  a["basis"] = L.basis_names();
  ordered_json brackets = ordered_json::array();
  const auto& names = L.basis_names();
  for (const auto& [key, v] : L.constants()) {
    brackets.push_back(ordered_json{{"left", names[key.first]},
                                    {"right", names[key.second]},
                                    {"value", render_combination(L, v)}});
  }
  a["brackets"] = brackets;
  return a;
}

ordered_json structure_json(const StructureReport& s) {
  ordered_json j;
  j["derived_series_dims"] = s.derived_series_dims;
  j["lower_central_series_dims"] = s.lower_central_series_dims;
  j["solvable"] = s.solvable;
  j["nilpotent"] = s.nilpotent;
  j["abelianization_dim"] = s.abelianization_dim;
  j["center_dim"] = s.center_dim;
  return j;
}

ordered_json estimate_json(const ComponentEstimate& e) {
  return ordered_json{{"samples", e.sample_count}, {"seed", e.seed}, {"component_count", e.component_count}};
}

}  // namespace

std::string render_combination(const LieAlgebra& L, const RatVec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_zero(v[i])) continue;
    if (!out.empty()) out += " + ";
    if (v[i] != 1) out += to_string(v[i]) + " ";
    out += L.basis_names()[i];
  }
  return out.empty() ? "0" : out;
}

AnalysisReport analyze(const LieAlgebra& L, const AnalyzeOptions& options) {
  AnalysisReport report;
  auto& j = report.json;
  auto refuse = [&](const RefusalError& e) {
    report.exit_code = exit_refusal;
    return refused(L, e);
  };

  j["algebra"] = algebra_json(L);
  const StructureReport structure = analyze_structure(L);
  j["structure"] = structure_json(structure);

  GroupFlags flags;
  flags.simply_connected = options.simply_connected;
  bool exp_ok = false;
  if (!structure.solvable) {
    j["exponentiality"] = refuse(RefusalError(RefusalKind::not_solvable, "Lie algebra is not solvable"));
  } else {
    flags.exponentiality = options.assume_exponential ? asserted_exponential()
                                                      : exponentiality_check(L, options.seed, options.exp_trials);
    ordered_json e;
    e["status"] = to_string(flags.exponentiality.status);
    if (flags.exponentiality.witness) {
      e["witness"] = render_combination(L, *flags.exponentiality.witness);
      e["witness_coords"] = vector_json(*flags.exponentiality.witness);
    }
    e["seed"] = flags.exponentiality.seed;
    e["trials"] = flags.exponentiality.trials;
    j["exponentiality"] = e;
    exp_ok = flags.exponentiality.status != ExpStatus::certified_no;
  }

  // Invariants and projections share the closed-form hypotheses.
  std::optional<ProjectionVerdict> projection;
  try {
    ordered_json inv;
    const std::size_t rr = real_rank(L, flags);
    const std::size_t tsr = stable_rank(L, flags);
    inv["hypothesis"] = flags.exponentiality.status == ExpStatus::asserted ? "exponential (asserted)"
                                                                            : "exponential (heuristic)";
    inv["real_rank"] = rr;
    inv["stable_rank"] = tsr;
    inv["real_line_reading"] = "G = R is taken to mean dim g = 1";
    j["invariants"] = inv;
    projection = projection_verdict(L, flags, {options.samples, options.seed});
  } catch (const RefusalError& e) {
    ordered_json inv = refuse(e);
    if (e.kind() == RefusalKind::not_simply_connected && exp_ok) {
      const auto bound = rr_upper_bound_nonsimply_connected(L, flags.exponentiality);
      inv["rr_upper_bound"] = ordered_json{{"value", bound.value}, {"possibly_strict", bound.possibly_strict}};
    }
    j["invariants"] = inv;
  }

  ordered_json co;
  co["p_polynomial"] = p_polynomial(L).to_string(dual_names(L));
  co["pfaffian"] = pfaffian_polynomial(L).to_string(dual_names(L));
  const bool open = has_open_orbits(L);
  co["open_orbits"] = open;
  if (open) {
    const ComponentEstimate est = projection && projection->estimate
                                      ? *projection->estimate
                                      : estimate_open_orbit_components(L, options.samples, options.seed);
    co["component_estimate"] = estimate_json(est);
  } else {
    co["component_estimate"] = ordered_json{{"samples", 0}, {"seed", options.seed}, {"component_count", 0}};
  }
  j["coadjoint"] = co;

  if (projection) {
    ordered_json p;
    p["verdict"] = to_string(projection->verdict);
    p["gr_equals_J0"] = projection->gr_equals_J0;
    p["J0_proper"] = projection->J0_proper;
    if (projection->open_orbit_count_estimate) {
      p["open_orbit_count_estimate"] = *projection->open_orbit_count_estimate;
      p["seed"] = options.seed;
    }
    j["projections"] = p;
  } else {
    j["projections"] = j["invariants"].contains("refused")
                           ? ordered_json{{"refused", j["invariants"]["refused"]}}
                           : ordered_json{{"refused", {{"reason", "unavailable"}}}};
  }

  try {
    const FactTable table = infer(derive_group_filtration(L, flags));
    ordered_json inf;
    inf["rr"] = interval_to_json(table.total.rr);
    inf["tsr"] = interval_to_json(table.total.tsr);
    bool agree = false;
    if (j["invariants"].contains("real_rank")) {
      const auto rr = j["invariants"]["real_rank"].get<std::uint32_t>();
      const auto tsr = j["invariants"]["stable_rank"].get<std::uint32_t>();
      agree = table.total.rr == Interval{rr, rr} && table.total.tsr == Interval{tsr, tsr};
    }
    inf["agreement"] = agree;
    inf["trace_length"] = table.trace.size();
    j["inference"] = inf;
  } catch (const RefusalError& e) {
    j["inference"] = refuse(e);
  } catch (const Contradiction& e) {
    j["inference"] = ordered_json{{"contradiction", e.what()}, {"agreement", false}};
  }
  return report;
}

std::string dump_report(const AnalysisReport& report) { return report.json.dump(2) + "\n"; }

namespace {

void render_value(std::ostringstream& os, const ordered_json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const auto& [key, value] : v.items()) {
    if (value.is_object()) {
      os << pad << key << ":\n";
      render_value(os, value, indent + 1);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      os << pad << key << ":\n";
      for (const auto& item : value) {
        std::string line;
        for (const auto& [k, x] : item.items()) {
          line += (line.empty() ? "" : " ") + k + "=" + (x.is_string() ? x.get<std::string>() : x.dump());
        }
        os << pad << "  - " << line << "\n";
      }
    } else {
      os << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

}  // namespace

std::string render_report(const AnalysisReport& report) {
  std::ostringstream os;
  render_value(os, report.json, 0);
  return os.str();
}

}  // namespace orbit_rank

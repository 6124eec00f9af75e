#include "orbit_rank/filtration_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace orbit_rank {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

Tri parse_tri(const std::string& v, std::size_t line, const std::string& key) {
  if (v == "true") return true;
  if (v == "false") return false;
  if (v == "unknown") return std::nullopt;
  throw FiltrationSyntaxError(line, "attribute '" + key + "' expects true|false|unknown, got '" + v + "'");
}

bool parse_bool(const std::string& v, std::size_t line, const std::string& key) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw FiltrationSyntaxError(line, "flag '" + key + "' expects true|false, got '" + v + "'");
}

std::optional<std::uint32_t> parse_nat(const std::string& v, std::size_t line, const std::string& key) {
  if (v == "unknown") return std::nullopt;
  if (v.empty() || v.size() > 6 || v.find_first_not_of("0123456789") != std::string::npos) {
    throw FiltrationSyntaxError(line, "attribute '" + key + "' expects a natural number or unknown, got '" + v + "'");
  }
  return static_cast<std::uint32_t>(std::stoul(v));
}

NodeKind parse_kind(const std::string& v, std::size_t line) {
  if (v == "continuous_trace") return NodeKind::continuous_trace;
  if (v == "commutative") return NodeKind::commutative;
  if (v == "elementary") return NodeKind::elementary;
  if (v == "generic") return NodeKind::generic;
  throw FiltrationSyntaxError(line, "unknown node kind '" + v + "'");
}

void apply_attr(NodeAnnotation& a, const std::string& key, const std::string& v, std::size_t line) {
  if (key == "kind") {
    a.kind = parse_kind(v, line);
  } else if (key == "spectrum_dim") {
    a.spectrum_dim = parse_nat(v, line, key);
  } else if (key == "spectrum_compact") {
    a.spectrum_compact = parse_tri(v, line, key);
  } else if (key == "irreps_infinite_dim") {
    a.irreps_infinite_dim = parse_tri(v, line, key);
  } else if (key == "hausdorff_spectrum") {
    a.hausdorff_spectrum = parse_tri(v, line, key);
  } else if (key == "no_compact_spectrum_component") {
    a.no_compact_spectrum_component = parse_tri(v, line, key);
  } else if (key == "separable") {
    a.separable = parse_tri(v, line, key);
  } else if (key == "fiber_dim") {
    if (v == "infinite") {
      a.fiber_dim = FiberDim::infinite();
    } else if (auto n = parse_nat(v, line, key)) {
      a.fiber_dim = FiberDim::finite(*n);
    } else {
      a.fiber_dim = FiberDim{};
    }
  } else if (key == "spectrum_ambient_dim") {
    a.spectrum_ambient_dim = parse_nat(v, line, key);
  } else if (key == "rr_lo") {
    a.rr_lo = parse_nat(v, line, key);
  } else if (key == "rr_hi") {
    a.rr_hi = parse_nat(v, line, key);
  } else if (key == "tsr_lo") {
    a.tsr_lo = parse_nat(v, line, key);
  } else if (key == "tsr_hi") {
    a.tsr_hi = parse_nat(v, line, key);
  } else {
    throw FiltrationSyntaxError(line, "unknown attribute '" + key + "'");
  }
}

void apply_flag(AlgebraFlags& f, const std::string& key, const std::string& v, std::size_t line) {
  if (key == "liminary") {
    f.liminary = parse_tri(v, line, key);
  } else if (key == "group_derived") {
    f.group_derived = parse_bool(v, line, key);
  } else if (key == "real_line") {
    f.is_real_line_group = parse_bool(v, line, key);
  } else {
    throw FiltrationSyntaxError(line, "unknown flag '" + key + "'");
  }
}

FiltrationDoc finish(FiltrationDoc doc) {
  if (doc.nodes.empty()) throw FiltrationSyntaxError(0, "filtration has no nodes");
  return normalize(std::move(doc));
}

}  // namespace

FiltrationDoc parse_filtration(std::string_view text) {
  FiltrationDoc doc;
  bool header = false;
  bool flags_seen = false;
  std::set<std::string> node_names;
  std::set<std::string> node_attrs;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto tok = split_ws(raw);
    if (tok.empty()) continue;
    if (!header) {
      if (tok.size() != 2 || tok[0] != "filtration") {
        throw FiltrationSyntaxError(line, "expected header 'filtration 1'");
      }
      if (tok[1] != "1") throw FiltrationSyntaxError(line, "unsupported filtration version '" + tok[1] + "'");
      header = true;
      continue;
    }
    if (tok[0] == "flags") {
      if (flags_seen) throw FiltrationSyntaxError(line, "duplicate flags line");
      flags_seen = true;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        auto eq = tok[i].find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == tok[i].size()) {
          throw FiltrationSyntaxError(line, "expected key=value, got '" + tok[i] + "'");
        }
        apply_flag(doc.flags, tok[i].substr(0, eq), tok[i].substr(eq + 1), line);
      }
    } else if (tok[0] == "node") {
      if (tok.size() != 2) throw FiltrationSyntaxError(line, "expected 'node <name>'");
      if (!node_names.insert(tok[1]).second) {
        throw FiltrationSyntaxError(line, "duplicate node name '" + tok[1] + "'");
      }
      doc.nodes.push_back({tok[1], {}});
      node_attrs.clear();
    } else if (tok[0] == "attr") {
      if (tok.size() != 4 || tok[2] != "=") throw FiltrationSyntaxError(line, "expected 'attr <key> = <value>'");
      if (doc.nodes.empty()) throw FiltrationSyntaxError(line, "attr before any node");
      if (!node_attrs.insert(tok[1]).second) {
        throw FiltrationSyntaxError(line, "attribute '" + tok[1] + "' given twice");
      }
      apply_attr(doc.nodes.back().annotation, tok[1], tok[3], line);
    } else {
      throw FiltrationSyntaxError(line, "unexpected '" + tok[0] + "'");
    }
  }
  if (!header) throw FiltrationSyntaxError(line, "missing 'filtration 1' header");
  return finish(std::move(doc));
}

namespace {

std::string json_scalar(const nlohmann::json& v, const std::string& key) {
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return std::to_string(v.get<std::int64_t>());
  if (v.is_string()) return v.get<std::string>();
  throw FiltrationSyntaxError(0, "attribute '" + key + "' has an unsupported JSON value");
}

}  // namespace

FiltrationDoc parse_filtration_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FiltrationSyntaxError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("filtration") || j["filtration"] != 1) {
    throw FiltrationSyntaxError(0, "expected {\"filtration\": 1, ...}");
  }
  FiltrationDoc doc;
  if (j.contains("flags")) {
    if (!j["flags"].is_object()) throw FiltrationSyntaxError(0, "\"flags\" must be an object");
    for (const auto& [k, v] : j["flags"].items()) apply_flag(doc.flags, k, json_scalar(v, k), 0);
  }
  if (!j.contains("nodes") || !j["nodes"].is_array()) throw FiltrationSyntaxError(0, "\"nodes\" must be an array");
  std::set<std::string> names;
  for (const auto& node : j["nodes"]) {
    if (!node.is_object() || !node.contains("name") || !node["name"].is_string()) {
      throw FiltrationSyntaxError(0, "every node needs a string \"name\"");
    }
    std::string name = node["name"].get<std::string>();
    if (!names.insert(name).second) throw FiltrationSyntaxError(0, "duplicate node name '" + name + "'");
    FiltrationNode fn{name, {}};
    if (node.contains("attrs")) {
      if (!node["attrs"].is_object()) throw FiltrationSyntaxError(0, "\"attrs\" must be an object");
      for (const auto& [k, v] : node["attrs"].items()) apply_attr(fn.annotation, k, json_scalar(v, k), 0);
    }
    doc.nodes.push_back(std::move(fn));
  }
  return finish(std::move(doc));
}

FiltrationDoc load_filtration_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  const bool is_json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  return is_json ? parse_filtration_json(ss.str()) : parse_filtration(ss.str());
}

// ---------------------------------------------------------------- rendering

namespace {

std::string tri_str(const Tri& t) { return t ? (*t ? "true" : "false") : "unknown"; }

// Known attributes in a fixed order, as (key, value) text pairs.
std::vector<std::pair<std::string, std::string>> known_attrs(const NodeAnnotation& a) {
  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("kind", to_string(a.kind));
  auto nat = [&](const char* key, const std::optional<std::uint32_t>& v) {
    if (v) out.emplace_back(key, std::to_string(*v));
  };
  auto tri = [&](const char* key, const Tri& v) {
    if (v) out.emplace_back(key, tri_str(v));
  };
  nat("spectrum_dim", a.spectrum_dim);
  tri("spectrum_compact", a.spectrum_compact);
  tri("irreps_infinite_dim", a.irreps_infinite_dim);
  tri("hausdorff_spectrum", a.hausdorff_spectrum);
  tri("no_compact_spectrum_component", a.no_compact_spectrum_component);
  tri("separable", a.separable);
  if (a.fiber_dim.state == FiberDim::State::infinite) out.emplace_back("fiber_dim", "infinite");
  if (a.fiber_dim.state == FiberDim::State::finite) out.emplace_back("fiber_dim", std::to_string(a.fiber_dim.value));
  nat("spectrum_ambient_dim", a.spectrum_ambient_dim);
  nat("rr_lo", a.rr_lo);
  nat("rr_hi", a.rr_hi);
  nat("tsr_lo", a.tsr_lo);
  nat("tsr_hi", a.tsr_hi);
  return out;
}

nlohmann::ordered_json facts_to_json(const Facts& f, bool with_spectrum) {
  nlohmann::ordered_json j;
  j["rr"] = interval_to_json(f.rr);
  j["tsr"] = interval_to_json(f.tsr);
  if (with_spectrum) j["spectrum_dim"] = interval_to_json(f.spectrum_dim);
  j["gr"] = to_string(f.gr);
  return j;
}

}  // namespace

std::string render_filtration(const FiltrationDoc& doc) {
  std::ostringstream os;
  os << "filtration 1\n";
  for (const auto& note : doc.notes) os << "# " << note << "\n";
  os << "flags liminary=" << tri_str(doc.flags.liminary)
     << " group_derived=" << (doc.flags.group_derived ? "true" : "false")
     << " real_line=" << (doc.flags.is_real_line_group ? "true" : "false") << "\n";
  for (const auto& node : doc.nodes) {
    os << "node " << node.name << "\n";
    for (const auto& [k, v] : known_attrs(node.annotation)) os << "attr " << k << " = " << v << "\n";
  }
  return os.str();
}

nlohmann::ordered_json filtration_to_json(const FiltrationDoc& doc) {
  nlohmann::ordered_json j;
  j["filtration"] = 1;
  nlohmann::ordered_json flags;
  flags["liminary"] = doc.flags.liminary ? nlohmann::ordered_json(*doc.flags.liminary) : nlohmann::ordered_json("unknown");
  flags["group_derived"] = doc.flags.group_derived;
  flags["real_line"] = doc.flags.is_real_line_group;
  j["flags"] = flags;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const auto& node : doc.nodes) {
    nlohmann::ordered_json attrs;
    for (const auto& [k, v] : known_attrs(node.annotation)) {
      if (v == "true" || v == "false") {
        attrs[k] = v == "true";
      } else if (v.find_first_not_of("0123456789") == std::string::npos) {
        attrs[k] = std::stoul(v);
      } else {
        attrs[k] = v;
      }
    }
    j["nodes"].push_back({{"name", node.name}, {"attrs", attrs}});
  }
  return j;
}

nlohmann::ordered_json interval_to_json(const Interval& iv) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  j.push_back(iv.lo);
  if (iv.hi) {
    j.push_back(*iv.hi);
  } else {
    j.push_back("inf");
  }
  return j;
}

nlohmann::ordered_json fact_table_to_json(const FactTable& table) {
  nlohmann::ordered_json j;
  j["nodes"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < table.nodes.size(); ++i) {
    nlohmann::ordered_json n;
    n["name"] = table.node_names[i];
    n.update(facts_to_json(table.nodes[i], true));
    j["nodes"].push_back(n);
  }
  j["total"] = facts_to_json(table.total, false);
  j["trace"] = nlohmann::ordered_json::array();
  for (const auto& e : table.trace) {
    nlohmann::ordered_json t;
    t["rule"] = e.rule;
    t["target"] = e.target == kTotal ? std::string("total") : table.node_names[e.target];
    t["before"] = facts_to_json(e.before, e.target != kTotal);
    t["after"] = facts_to_json(e.after, e.target != kTotal);
    if (!e.flag.empty()) t["flag"] = e.flag;
    j["trace"].push_back(t);
  }
  return j;
}

std::string render_fact_table(const FactTable& table) {
  std::ostringstream os;
  auto row = [&](const std::string& name, const Facts& f) {
    os << "  " << name << ": rr " << f.rr.to_string() << "  tsr " << f.tsr.to_string() << "  gr " << to_string(f.gr)
       << "\n";
  };
  os << "facts:\n";
  for (std::size_t i = 0; i < table.nodes.size(); ++i) row(table.node_names[i], table.nodes[i]);
  row("total", table.total);
  os << "trace (" << table.trace.size() << " steps):\n";
  for (std::size_t k = 0; k < table.trace.size(); ++k) {
    const auto& e = table.trace[k];
    const std::string target = e.target == kTotal ? std::string("total") : table.node_names[e.target];
    os << "  " << (k + 1) << ". " << e.rule << " on " << target << ":";
    if (!(e.before.rr == e.after.rr)) os << " rr " << e.before.rr.to_string() << " -> " << e.after.rr.to_string();
    if (!(e.before.tsr == e.after.tsr)) os << " tsr " << e.before.tsr.to_string() << " -> " << e.after.tsr.to_string();
    if (!(e.before.spectrum_dim == e.after.spectrum_dim)) {
      os << " spectrum_dim " << e.before.spectrum_dim.to_string() << " -> " << e.after.spectrum_dim.to_string();
    }
    if (e.before.gr != e.after.gr) os << " gr " << to_string(e.before.gr) << " -> " << to_string(e.after.gr);
    if (!e.flag.empty()) os << "  [" << e.flag << "]";
    os << "\n";
  }
  return os.str();
}

}  // namespace orbit_rank

#include "orbit_rank/inference.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace orbit_rank {

std::string to_string(NodeKind k) {
  switch (k) {
    case NodeKind::continuous_trace: return "continuous_trace";
    case NodeKind::commutative: return "commutative";
    case NodeKind::elementary: return "elementary";
    case NodeKind::generic: return "generic";
  }
  return "generic";
}

std::string to_string(GrFact g) {
  switch (g) {
    case GrFact::unknown: return "unknown";
    case GrFact::equals_first_ideal: return "equals_first_ideal";
    case GrFact::zero: return "zero";
  }
  return "unknown";
}

Interval Interval::meet(const Interval& other) const {
  Interval out;
  out.lo = std::max(lo, other.lo);
  if (hi && other.hi) {
    out.hi = std::min(*hi, *other.hi);
  } else {
    out.hi = hi ? hi : other.hi;
  }
  return out;
}

std::string Interval::to_string() const {
  return "[" + std::to_string(lo) + ", " + (hi ? std::to_string(*hi) : std::string("inf")) + "]";
}

// ---------------------------------------------------------------- normalize

namespace {

void fill(Tri& slot, bool value, const std::string& node, const char* attr, const char* kind) {
  if (slot && *slot != value) {
    throw FiltrationError("node '" + node + "': " + kind + " nodes require " + attr + " = " +
                          (value ? "true" : "false"));
  }
  slot = value;
}

}  // namespace

FiltrationDoc normalize(FiltrationDoc doc) {
  if (doc.nodes.empty()) throw FiltrationError("filtration has no nodes");
  std::set<std::string> names;
  for (auto& node : doc.nodes) {
    if (node.name.empty()) throw FiltrationError("node with empty name");
    if (!names.insert(node.name).second) throw FiltrationError("duplicate node name '" + node.name + "'");
    NodeAnnotation& a = node.annotation;
    for (auto* v : {&a.spectrum_dim, &a.spectrum_ambient_dim, &a.rr_lo, &a.rr_hi, &a.tsr_lo, &a.tsr_hi}) {
      if (*v && **v > kIntervalCap) {
        throw FiltrationError("node '" + node.name + "': value " + std::to_string(**v) + " exceeds cap " +
                              std::to_string(kIntervalCap));
      }
    }
    if (a.fiber_dim.state == FiberDim::State::finite && a.fiber_dim.value > kIntervalCap) {
      throw FiltrationError("node '" + node.name + "': fiber_dim exceeds cap");
    }
    if (a.kind == NodeKind::commutative) {
      fill(a.irreps_infinite_dim, false, node.name, "irreps_infinite_dim", "commutative");
      if (a.fiber_dim.state == FiberDim::State::unknown) a.fiber_dim = FiberDim::finite(1);
      if (!a.fiber_dim.is_finite(1)) {
        throw FiltrationError("node '" + node.name + "': commutative nodes have fiber_dim 1");
      }
    }
    if (a.kind == NodeKind::elementary) {
      fill(a.irreps_infinite_dim, true, node.name, "irreps_infinite_dim", "elementary");
      fill(a.separable, true, node.name, "separable", "elementary");
      fill(a.spectrum_compact, true, node.name, "spectrum_compact", "elementary");
      fill(a.hausdorff_spectrum, true, node.name, "hausdorff_spectrum", "elementary");
      fill(a.no_compact_spectrum_component, false, node.name, "no_compact_spectrum_component", "elementary");
      if (a.spectrum_dim && *a.spectrum_dim != 0) {
        throw FiltrationError("node '" + node.name + "': elementary nodes have spectrum_dim 0");
      }
      a.spectrum_dim = 0;
      if (a.fiber_dim.state == FiberDim::State::unknown) a.fiber_dim = FiberDim::infinite();
      if (a.fiber_dim.state != FiberDim::State::infinite) {
        throw FiltrationError("node '" + node.name + "': elementary nodes have infinite fiber_dim");
      }
    }
  }
  return doc;
}

// ---------------------------------------------------------------- engine

namespace {

bool is_true(const Tri& t) { return t.has_value() && *t; }

std::optional<std::uint32_t> max_hi(const std::optional<std::uint32_t>& a, const std::optional<std::uint32_t>& b) {
  if (!a || !b) return std::nullopt;
  return std::max(*a, *b);
}

class Engine {
 public:
  Engine(const FiltrationDoc& doc, const InferOptions& opt) : doc_(doc), opt_(opt), table_(initial_table(doc)) {}

  FactTable run() {
    check_seeds();
    std::vector<std::pair<std::string, std::function<void()>>> rules = {
        {"R0", [this] { r0(); }},   {"R1", [this] { r1(); }},   {"R2", [this] { r2(); }},
        {"R3", [this] { r3(); }},   {"R4", [this] { r4(); }},   {"R5", [this] { r5(); }},
        {"R6", [this] { r6(); }},   {"R7", [this] { r7(); }},   {"R8", [this] { r8(); }},
        {"R9", [this] { r9(); }},   {"R10", [this] { r10(); }}, {"R11", [this] { r11(); }},
        {"R12", [this] { r12(); }}, {"R13", [this] { r13(); }}, {"R14", [this] { r14(); }},
        {"R15", [this] { r15(); }}, {"R16", [this] { r16(); }}, {"R17", [this] { r17(); }},
        {"R18", [this] { r18(); }},
    };
    if (opt_.reverse_order) std::reverse(rules.begin(), rules.end());
    // Each effective pass tightens at least one endpoint, and every endpoint
    // moves at most kIntervalCap + 2 times.
    const std::size_t max_passes = (doc_.nodes.size() + 1) * 3 * (kIntervalCap + 3) + 8;
    for (std::size_t pass = 0;; ++pass) {
      if (pass > max_passes) throw std::logic_error("inference did not reach a fixpoint");
      const std::size_t before = table_.trace.size();
      for (auto& [id, rule] : rules) {
        current_rule_ = id;
        rule();
      }
      if (table_.trace.size() == before) break;
    }
    return std::move(table_);
  }

 private:
  const FiltrationDoc& doc_;
  const InferOptions& opt_;
  FactTable table_;
  std::string current_rule_;

  std::size_t n() const { return doc_.nodes.size(); }
  const NodeAnnotation& ann(std::size_t i) const { return doc_.nodes[i].annotation; }
  Facts& facts(std::size_t target) { return target == kTotal ? table_.total : table_.nodes[target]; }
  std::string target_name(std::size_t target) const {
    return target == kTotal ? std::string("total") : doc_.nodes[target].name;
  }

  void check_seeds() {
    for (std::size_t i = 0; i < n(); ++i) {
      for (const Interval* iv : {&table_.nodes[i].rr, &table_.nodes[i].tsr}) {
        if (iv->empty()) {
          throw Contradiction(doc_.nodes[i].name, "seed", *iv,
                              "seeded interval " + iv->to_string() + " on node '" + doc_.nodes[i].name + "' is empty");
        }
      }
    }
  }

  void commit(std::size_t target, const Facts& updated, const std::string& flag = "") {
    Facts& cur = facts(target);
    if (updated == cur) return;
    for (const Interval* iv : {&updated.rr, &updated.tsr, &updated.spectrum_dim}) {
      if (iv->empty()) {
        throw Contradiction(target_name(target), current_rule_, *iv,
                            current_rule_ + " forces empty interval " + iv->to_string() + " on '" +
                                target_name(target) + "'");
      }
    }
    table_.trace.push_back({current_rule_, target, cur, updated, flag});
    cur = updated;
  }

  void tighten_rr(std::size_t target, const Interval& bound, const std::string& flag = "") {
    Facts f = facts(target);
    f.rr = f.rr.meet(bound);
    commit(target, f, flag);
  }
  void tighten_tsr(std::size_t target, const Interval& bound, const std::string& flag = "") {
    Facts f = facts(target);
    f.tsr = f.tsr.meet(bound);
    commit(target, f, flag);
  }
  void tighten_gr(std::size_t target, GrFact g) {
    Facts f = facts(target);
    f.gr = std::max(f.gr, g);
    commit(target, f);
  }

  // Continuous-trace hypotheses: separable continuous trace, infinite-dimensional
  // irreps, finite-dimensional spectrum.
  bool continuous_trace_hyp(std::size_t i) const {
    const NodeAnnotation& a = ann(i);
    const bool ct_kind = a.kind == NodeKind::continuous_trace || a.kind == NodeKind::elementary;
    return ct_kind && is_true(a.separable) && is_true(a.irreps_infinite_dim) &&
           table_.nodes[i].spectrum_dim.hi.has_value();
  }
  bool lower_nodes_ct() const {
    for (std::size_t i = 0; i + 1 < n(); ++i) {
      if (!continuous_trace_hyp(i)) return false;
    }
    return true;
  }
  std::optional<std::uint32_t> compact_commutative_dim(std::size_t i) const {
    const NodeAnnotation& a = ann(i);
    const Interval& d = table_.nodes[i].spectrum_dim;
    if (a.kind == NodeKind::commutative && is_true(a.spectrum_compact) && d.singleton()) return d.lo;
    return std::nullopt;
  }

  // Equality rr(A) = max over the given nodes.
  void rr_max_over(std::size_t first, std::size_t last) {
    Interval bound{0, std::uint32_t{0}};
    for (std::size_t i = first; i <= last; ++i) {
      const Interval& r = table_.nodes[i].rr;
      bound.lo = std::max(bound.lo, r.lo);
      bound.hi = max_hi(bound.hi, r.hi);
    }
    tighten_rr(kTotal, bound);
  }

  void r0() {
    if (n() != 1) return;
    Facts f = table_.total;
    f.rr = f.rr.meet(table_.nodes[0].rr);
    f.tsr = f.tsr.meet(table_.nodes[0].tsr);
    commit(kTotal, f);
  }
  void r1() {
    for (std::size_t i = 0; i < n(); ++i) {
      if (auto d = compact_commutative_dim(i)) tighten_rr(i, {*d, *d});
    }
  }
  void r2() {
    for (std::size_t i = 0; i < n(); ++i) {
      if (continuous_trace_hyp(i)) tighten_rr(i, {0, 1u});
    }
  }
  void r3() {
    if (n() == 2 && continuous_trace_hyp(0)) rr_max_over(0, 1);
  }
  void r4() {
    if (lower_nodes_ct()) rr_max_over(0, n() - 1);
  }
  void r5() {
    for (std::size_t i = 0; i < n(); ++i) {
      if (auto amb = ann(i).spectrum_ambient_dim) {
        Facts f = table_.nodes[i];
        f.spectrum_dim = f.spectrum_dim.meet({0, *amb});
        commit(i, f);
      }
    }
  }
  void r6() {
    if (auto d = compact_commutative_dim(n() - 1)) tighten_rr(kTotal, {*d, std::nullopt});
  }
  void r7() {
    for (std::size_t i = 0; i < n(); ++i) {
      if (auto d = compact_commutative_dim(i)) tighten_tsr(i, {1 + *d / 2, 1 + *d / 2});
    }
  }
  void r8() {
    for (std::size_t i = 0; i < n(); ++i) {
      if (continuous_trace_hyp(i) || ann(i).kind == NodeKind::elementary) tighten_tsr(i, {1, 2u});
    }
  }
  void r9() {
    std::uint32_t lo = 1;
    for (const auto& f : table_.nodes) lo = std::max(lo, f.tsr.lo);
    tighten_tsr(kTotal, {lo, std::nullopt});
  }
  void tsr_upper_from_top() {
    const auto& top = table_.nodes[n() - 1].tsr;
    if (top.hi) tighten_tsr(kTotal, {1, std::max<std::uint32_t>(2, *top.hi)});
  }
  void r10() {
    if (n() == 2 && continuous_trace_hyp(0)) tsr_upper_from_top();
  }
  void r11() {
    if (n() >= 2 && lower_nodes_ct()) tsr_upper_from_top();
  }
  void r12() {
    for (std::size_t i = 0; i < n(); ++i) {
      if (is_true(ann(i).hausdorff_spectrum) && is_true(ann(i).no_compact_spectrum_component)) {
        tighten_gr(i, GrFact::zero);
      }
    }
  }
  void gr_from_first_ideal() {
    tighten_gr(kTotal, GrFact::equals_first_ideal);
    if (table_.nodes[0].gr == GrFact::zero) tighten_gr(kTotal, GrFact::zero);
  }
  void r13() {
    if (n() == 2 && table_.nodes[1].gr == GrFact::zero) gr_from_first_ideal();
  }
  void r14() {
    for (std::size_t i = 1; i < n(); ++i) {
      if (table_.nodes[i].gr != GrFact::zero) return;
    }
    gr_from_first_ideal();
  }
  void r15() {
    if (!is_true(doc_.flags.liminary)) return;
    for (std::size_t i = 0; i + 1 < n(); ++i) {
      if (ann(i).fiber_dim.state != FiberDim::State::infinite) return;
    }
    if (!ann(n() - 1).fiber_dim.is_finite(1)) return;
    const Interval& d = table_.nodes[n() - 1].spectrum_dim;
    if (d.singleton()) tighten_rr(kTotal, {d.lo, d.lo});
  }
  void r16() {
    if (table_.total.gr == GrFact::zero) tighten_rr(kTotal, {1, std::nullopt});
  }
  void r17() {
    if (!opt_.enable_r17) return;
    for (std::size_t i = 0; i < n(); ++i) {
      if (ann(i).kind != NodeKind::elementary) continue;
      Facts f = table_.nodes[i];
      f.rr = f.rr.meet({0, 0u});
      f.tsr = f.tsr.meet({2, 2u});
      commit(i, f, "standard facts about the compacts");
    }
  }
  void r18() {
    if (doc_.flags.group_derived && !doc_.flags.is_real_line_group) tighten_tsr(kTotal, {2, std::nullopt});
  }
};

}  // namespace

FactTable initial_table(const FiltrationDoc& doc) {
  FactTable t;
  for (const auto& node : doc.nodes) {
    const NodeAnnotation& a = node.annotation;
    Facts f;
    if (a.rr_lo) f.rr.lo = *a.rr_lo;
    if (a.rr_hi) f.rr.hi = *a.rr_hi;
    if (a.tsr_lo) f.tsr.lo = std::max<std::uint32_t>(1, *a.tsr_lo);
    if (a.tsr_hi) f.tsr.hi = *a.tsr_hi;
    if (a.spectrum_dim) f.spectrum_dim = {*a.spectrum_dim, *a.spectrum_dim};
    t.node_names.push_back(node.name);
    t.nodes.push_back(f);
  }
  return t;
}

FactTable infer(const FiltrationDoc& doc, const InferOptions& options) {
  FiltrationDoc normalized = normalize(doc);
  return Engine(normalized, options).run();
}

FactTable replay(const FiltrationDoc& doc, const std::vector<TraceEntry>& trace) {
  FactTable t = initial_table(normalize(doc));
  for (const auto& e : trace) {
    Facts& cur = e.target == kTotal ? t.total : t.nodes.at(e.target);
    if (!(cur == e.before)) throw std::logic_error("trace entry " + e.rule + " does not match the replayed state");
    cur = e.after;
  }
  t.trace = trace;
  return t;
}

FiltrationDoc derive_group_filtration(const LieAlgebra& L, const GroupFlags& flags) {
  require_closed_form_hypotheses(L, flags);
  const auto r = static_cast<std::uint32_t>(abelianization_dim(L));
  FiltrationDoc doc;
  doc.flags.group_derived = true;
  doc.flags.is_real_line_group = L.dim() == 1;
  if (!is_abelian(L)) {
    FiltrationNode layer;
    layer.name = "J_mid";
    NodeAnnotation& a = layer.annotation;
    a.kind = NodeKind::continuous_trace;
    a.separable = true;
    a.irreps_infinite_dim = true;
    a.hausdorff_spectrum = true;
    a.fiber_dim = FiberDim::infinite();
    a.spectrum_ambient_dim = static_cast<std::uint32_t>(L.dim());
    doc.nodes.push_back(layer);
    doc.notes.push_back("J_mid stands for every continuous-trace layer J_j/J_{j-1}, j < n;");
    doc.notes.push_back("their spectra are semi-algebraic, locally closed in g* of dimension " +
                        std::to_string(L.dim()) + ".");
  }
  FiltrationNode top;
  top.name = "A/J_top";
  NodeAnnotation& a = top.annotation;
  a.kind = NodeKind::commutative;
  a.spectrum_dim = r;
  a.spectrum_compact = true;
  a.hausdorff_spectrum = true;
  a.no_compact_spectrum_component = r > 0;
  a.separable = true;
  doc.nodes.push_back(top);
  doc.notes.push_back("A/J_top = C_0([g,g]^perp); its one-point compactified spectrum is the sphere S^" +
                      std::to_string(r) + ".");
  return normalize(std::move(doc));
}

}  // namespace orbit_rank

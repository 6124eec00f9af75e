#pragma once

// Forward-chaining rank calculus over ideal filtrations
//   {0} = J_0 ⊆ J_1 ⊆ ... ⊆ J_n = A.
// Each node of a FiltrationDoc describes one subquotient J_j / J_{j-1}; the
// engine tightens real-rank and stable-rank intervals and projection facts
// for every node and for A itself until nothing changes.
//
// Rules (a rule fires only when every hypothesis is definitely true):
//   R0  one-node filtration: A is its only subquotient (rr, tsr copied up)
//   R1  commutative, compact spectrum of dimension d: rr = d
//   R2  separable continuous-trace node, infinite-dimensional irreps,
//       finite-dimensional spectrum: rr <= 1
//   R3  two nodes, ideal satisfies R2: rr(A) = max(rr(J), rr(A/J))
//   R4  nodes 1..n-1 satisfy R2: rr(A) = max over all nodes
//   R5  spectrum locally closed in a metric space of dimension a: dim <= a
//   R6  last node commutative with compact spectrum of dimension d: rr(A) >= d
//   R7  commutative, compact spectrum of dimension d: tsr = 1 + floor(d/2)
//   R8  stable node (R2 hypotheses, or the compacts): tsr <= 2
//   R9  tsr(A) >= tsr of every subquotient
//   R10 two nodes, ideal satisfies R2: tsr(A) <= max(2, tsr(A/J))
//   R11 nodes 1..n-1 satisfy R2: tsr(A) <= max(2, tsr(A/J_{n-1}))
//   R12 Hausdorff spectrum without compact components: no projections
//   R13 two nodes, quotient has no projections: Gr(A) = Gr(J)
//   R14 nodes 2..n have no projections: Gr(A) = Gr(J_1)
//   R15 liminary, fibers infinite except the last of dimension 1:
//       rr(A) = dim of the last spectrum
//   R16 A has no projections: rr(A) >= 1
//   R17 the compacts: rr = 0, tsr = 2 (standard facts; can be disabled)
//   R18 group algebra of a group other than R: tsr(A) >= 2

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbit_rank/invariants.hpp"
#include "orbit_rank/lie_algebra.hpp"

namespace orbit_rank {

/// Upper bound on every finite attribute and interval endpoint.
inline constexpr std::uint32_t kIntervalCap = 64;

/// Three-valued attribute: nullopt is unknown.
using Tri = std::optional<bool>;

/// nat | infinite | unknown
struct FiberDim {
  enum class State { unknown, finite, infinite };
  State state = State::unknown;
  std::uint32_t value = 0;

  static FiberDim finite(std::uint32_t v) { return {State::finite, v}; }
  static FiberDim infinite() { return {State::infinite, 0}; }
  bool is_finite(std::uint32_t v) const { return state == State::finite && value == v; }
  friend bool operator==(const FiberDim&, const FiberDim&) = default;
};

enum class NodeKind { continuous_trace, commutative, elementary, generic };

std::string to_string(NodeKind k);

/// Closed interval [lo, hi] of naturals; hi == nullopt means unbounded.
struct Interval {
  std::uint32_t lo = 0;
  std::optional<std::uint32_t> hi;

  bool empty() const { return hi && lo > *hi; }
  bool singleton() const { return hi && lo == *hi; }
  /// Intersection; may produce an empty interval.
  Interval meet(const Interval& other) const;
  std::string to_string() const;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct NodeAnnotation {
  NodeKind kind = NodeKind::generic;
  std::optional<std::uint32_t> spectrum_dim;
  /// spectrum_dim refers to a compact space (the one-point compactification
  /// for non-unital commutative nodes).
  Tri spectrum_compact;
  Tri irreps_infinite_dim;
  Tri hausdorff_spectrum;
  Tri no_compact_spectrum_component;
  Tri separable;
  FiberDim fiber_dim;
  /// Covering dimension of a metric space containing the spectrum as a
  /// locally closed subset.
  std::optional<std::uint32_t> spectrum_ambient_dim;
  /// Optional seed bounds on the node's ranks.
  std::optional<std::uint32_t> rr_lo, rr_hi, tsr_lo, tsr_hi;

  friend bool operator==(const NodeAnnotation&, const NodeAnnotation&) = default;
};

struct FiltrationNode {
  std::string name;
  NodeAnnotation annotation;
  friend bool operator==(const FiltrationNode&, const FiltrationNode&) = default;
};

struct AlgebraFlags {
  Tri liminary;
  bool group_derived = false;
  bool is_real_line_group = false;
  friend bool operator==(const AlgebraFlags&, const AlgebraFlags&) = default;
};

/// Nodes are ordered J_1/J_0, ..., J_n/J_{n-1}.
struct FiltrationDoc {
  std::vector<FiltrationNode> nodes;
  AlgebraFlags flags;
  /// Free-form remarks, rendered as comments.
  std::vector<std::string> notes;
  friend bool operator==(const FiltrationDoc& a, const FiltrationDoc& b) {
    return a.nodes == b.nodes && a.flags == b.flags;
  }
};

class FiltrationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checks names and the kind invariants, filling implied attributes:
/// commutative nodes get finite-dimensional irreps and fiber 1, elementary
/// nodes get the attributes of the compacts on a separable Hilbert space.
/// Throws FiltrationError on conflicts.
FiltrationDoc normalize(FiltrationDoc doc);

enum class GrFact { unknown, equals_first_ideal, zero };

std::string to_string(GrFact g);

struct Facts {
  Interval rr{0, std::nullopt};
  Interval tsr{1, std::nullopt};
  Interval spectrum_dim{0, std::nullopt};
  GrFact gr = GrFact::unknown;
  friend bool operator==(const Facts&, const Facts&) = default;
};

/// Index used for the whole algebra in trace entries.
inline constexpr std::size_t kTotal = static_cast<std::size_t>(-1);

struct TraceEntry {
  std::string rule;
  std::size_t target = kTotal;
  Facts before;
  Facts after;
  /// Set on rules whose content is not derived from the filtration lemmas.
  std::string flag;
};

struct FactTable {
  std::vector<std::string> node_names;
  std::vector<Facts> nodes;
  Facts total;
  std::vector<TraceEntry> trace;

  /// Facts only; the trace is ignored.
  bool same_facts(const FactTable& other) const { return nodes == other.nodes && total == other.total; }
};

class Contradiction : public std::runtime_error {
 public:
  Contradiction(std::string node, std::string rule, Interval interval, const std::string& what)
      : std::runtime_error(what), node_(std::move(node)), rule_(std::move(rule)), interval_(interval) {}
  const std::string& node() const { return node_; }
  const std::string& rule() const { return rule_; }
  const Interval& interval() const { return interval_; }

 private:
  std::string node_;
  std::string rule_;
  Interval interval_;
};

struct InferOptions {
  bool enable_r17 = true;
  /// Apply the rules in descending order inside each pass.
  bool reverse_order = false;
};

/// Table before any rule fires: seeds from the annotations only.
FactTable initial_table(const FiltrationDoc& doc);

/// Runs the rule set to a fixpoint. Throws Contradiction when a rule would
/// empty an interval (including seeds with lo > hi).
FactTable infer(const FiltrationDoc& doc, const InferOptions& options = {});

/// Re-applies a trace to the initial table. Throws std::logic_error if an
/// entry's recorded `before` does not match the replayed state.
FactTable replay(const FiltrationDoc& doc, const std::vector<TraceEntry>& trace);

/// Schematic filtration of C*(G) for a simply connected exponential G: one
/// representative continuous-trace layer (omitted when g is abelian) and the
/// commutative top quotient C_0([g,g]^⊥), whose compactified spectrum is the
/// r-sphere. Throws RefusalError when the closed-form hypotheses fail.
FiltrationDoc derive_group_filtration(const LieAlgebra& L, const GroupFlags& flags);

}  // namespace orbit_rank

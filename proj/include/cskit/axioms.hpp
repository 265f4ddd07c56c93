#ifndef CSKIT_AXIOMS_HPP
#define CSKIT_AXIOMS_HPP

// Verifiers for three axiom systems characterising crystal skeletons on
// abstract graphs whose vertices carry compositions and whose edges carry
// intervals: the global system (A0-A5), the branching system (S0-S6) and the
// local system (L0-L5), plus the classifier of local commutation relations.
//
// Edge types are never read from the input: they are inferred from the
// endpoint labels through the label rule (A2) and its inverse (A2').

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "crystal.hpp"
#include "labeled_graph.hpp"
#include "tableau.hpp"

namespace cskit {

// ---------------------------------------------------------------------------
// Reports

enum class AxiomSystem { GL, SN, LOCAL };

inline std::string to_string(AxiomSystem s) {
  switch (s) {
    case AxiomSystem::GL: return "GL";
    case AxiomSystem::SN: return "SN";
    case AxiomSystem::LOCAL: return "LOCAL";
  }
  return "?";
}

struct AxiomVerdict {
  std::string axiom;
  bool pass = true;
  std::string witness;  // first counterexample in scan order, empty on PASS
};

struct AxiomReport {
  AxiomSystem system = AxiomSystem::GL;
  std::vector<AxiomVerdict> verdicts;
  std::vector<std::string> notes;

  bool pass() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const AxiomVerdict& v) { return v.pass; });
  }
  const AxiomVerdict& at(const std::string& axiom) const {
    for (const auto& v : verdicts)
      if (v.axiom == axiom) return v;
    throw std::out_of_range("no verdict for " + axiom);
  }
  void add(const std::string& axiom, const CheckReport& r) { verdicts.push_back({axiom, r.ok, r.first()}); }
  // First failing axiom, or empty.
  std::string first_failure() const {
    for (const auto& v : verdicts)
      if (!v.pass) return v.axiom;
    return "";
  }
};

// Rejects graphs that are not well formed: labels must be compositions of n
// and intervals must lie in [1, n] with endpoints in range.
inline void validate_graph(const LabeledGraph& g) {
  if (g.n < 1) throw std::invalid_argument("n must be positive");
  if (g.labels.empty()) throw std::invalid_argument("graph has no vertices");
  for (std::size_t v = 0; v < g.labels.size(); ++v)
    if (g.labels[v].size() != g.n)
      throw std::invalid_argument("label of vertex " + std::to_string(v) + " is not a composition of " +
                                  std::to_string(g.n));
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const auto& e = g.edges[k];
    if (e.src < 0 || e.src >= g.size() || e.dst < 0 || e.dst >= g.size())
      throw std::invalid_argument("edge " + std::to_string(k) + " has an endpoint out of range");
    if (e.interval.lo < 1 || e.interval.hi > g.n || e.interval.lo > e.interval.hi)
      throw std::invalid_argument("edge " + std::to_string(k) + " interval out of range");
  }
}

// ---------------------------------------------------------------------------
// Interval placement

// I = I^- u {k} u I^+ with |I^-| = |I^+| = s. For an outgoing edge, block j
// (0-based) holds I^- u {k} and block j+1 holds I^+; for an incoming edge,
// block j holds I^- and block j+1 holds {k} u I^+.
struct Placement {
  int j = 0;
  int k = 0;
  int s = 0;
};

inline std::optional<Placement> out_placement(const Composition& a, const Interval& I) {
  if (I.size() < 3 || I.size() % 2 == 0) return std::nullopt;
  int s = (I.size() - 1) / 2, k = I.lo + s;
  auto bl = a.blocks();
  for (int j = 0; j + 1 < static_cast<int>(bl.size()); ++j)
    if (bl[j].hi == k) {
      if (bl[j].lo <= I.lo && bl[j + 1].hi >= I.hi) return Placement{j, k, s};
      return std::nullopt;
    }
  return std::nullopt;
}

inline std::optional<Placement> in_placement(const Composition& b, const Interval& I) {
  if (I.size() < 3 || I.size() % 2 == 0) return std::nullopt;
  int s = (I.size() - 1) / 2, k = I.lo + s;
  auto bl = b.blocks();
  for (int j = 0; j + 1 < static_cast<int>(bl.size()); ++j)
    if (bl[j + 1].lo == k) {
      if (bl[j].lo <= I.lo && bl[j + 1].hi >= I.hi) return Placement{j, k, s};
      return std::nullopt;
    }
  return std::nullopt;
}

// Every interval that may label an outgoing (resp. incoming) edge at a vertex
// with the given label, in increasing order.
inline std::vector<Interval> out_intervals(const Composition& a) {
  std::vector<Interval> out;
  auto bl = a.blocks();
  for (std::size_t j = 0; j + 1 < bl.size(); ++j) {
    int k = bl[j].hi;
    for (int s = 1; s <= std::min(bl[j].size() - 1, bl[j + 1].size()); ++s) out.push_back({k - s, k + s});
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Interval> in_intervals(const Composition& b) {
  std::vector<Interval> out;
  auto bl = b.blocks();
  for (std::size_t j = 0; j + 1 < bl.size(); ++j) {
    int k = bl[j + 1].lo;
    for (int s = 1; s <= std::min(bl[j].size(), bl[j + 1].size() - 1); ++s) out.push_back({k - s, k + s});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Label rules

namespace detail {

inline Composition replace_blocks(const std::vector<Interval>& bl, int from, int to,
                                  const std::vector<Interval>& mid) {
  std::vector<Interval> out(bl.begin(), bl.begin() + from);
  out.insert(out.end(), mid.begin(), mid.end());
  out.insert(out.end(), bl.begin() + to, bl.end());
  return Composition::from_blocks(out);
}

}  // namespace detail

// The label of the target of an edge of the given type out of a vertex
// labelled a, or nullopt when the type is not available for (a, I).
inline std::optional<Composition> label_after(const Composition& a, const Interval& I, EdgeType t) {
  auto p = out_placement(a, I);
  if (!p) return std::nullopt;
  auto bl = a.blocks();
  int j = p->j, k = p->k;
  switch (t) {
    case EdgeType::Preserving:
      return detail::replace_blocks(bl, j, j + 2, {{bl[j].lo, k - 1}, {k, bl[j + 1].hi}});
    case EdgeType::Increasing:
      if (bl[j + 1].hi == I.hi) return std::nullopt;
      return detail::replace_blocks(bl, j, j + 2, {{bl[j].lo, k - 1}, {k, I.hi}, {I.hi + 1, bl[j + 1].hi}});
    case EdgeType::Decreasing:
      if (j == 0 || bl[j].lo != I.lo) return std::nullopt;
      return detail::replace_blocks(bl, j - 1, j + 2, {{bl[j - 1].lo, k - 1}, {k, bl[j + 1].hi}});
  }
  return std::nullopt;
}

// The label of the source of an edge of the given type into a vertex
// labelled b, or nullopt when the type is not available for (b, I).
inline std::optional<Composition> label_before(const Composition& b, const Interval& I, EdgeType t) {
  auto p = in_placement(b, I);
  if (!p) return std::nullopt;
  auto bl = b.blocks();
  int j = p->j, k = p->k;
  switch (t) {
    case EdgeType::Preserving:
      return detail::replace_blocks(bl, j, j + 2, {{bl[j].lo, k}, {k + 1, bl[j + 1].hi}});
    case EdgeType::Increasing:
      if (bl[j + 1].hi != I.hi || j + 2 >= static_cast<int>(bl.size())) return std::nullopt;
      return detail::replace_blocks(bl, j, j + 3, {{bl[j].lo, k}, {k + 1, bl[j + 2].hi}});
    case EdgeType::Decreasing:
      if (bl[j].lo >= I.lo) return std::nullopt;
      return detail::replace_blocks(bl, j, j + 2, {{bl[j].lo, I.lo - 1}, {I.lo, k}, {k + 1, bl[j + 1].hi}});
  }
  return std::nullopt;
}

inline constexpr EdgeType kEdgeTypes[] = {EdgeType::Preserving, EdgeType::Increasing, EdgeType::Decreasing};

// The type of the edge a --I--> b read off the forward label rule.
inline std::optional<EdgeType> infer_type(const Composition& a, const Interval& I, const Composition& b) {
  for (EdgeType t : kEdgeTypes)
    if (label_after(a, I, t) == b) return t;
  return std::nullopt;
}

// The type of the edge a --I--> b read off the inverse label rule.
inline std::optional<EdgeType> infer_type_incoming(const Composition& a, const Interval& I,
                                                   const Composition& b) {
  for (EdgeType t : kEdgeTypes)
    if (label_before(b, I, t) == a) return t;
  return std::nullopt;
}

inline std::vector<std::optional<EdgeType>> infer_types(const LabeledGraph& g) {
  std::vector<std::optional<EdgeType>> out;
  for (const auto& e : g.edges) out.push_back(infer_type(g.labels[e.src], e.interval, g.labels[e.dst]));
  return out;
}

// The edges whose type could be inferred, with those types.
inline std::pair<LabeledGraph, std::vector<EdgeType>> typed_part(const LabeledGraph& g,
                                                                 const std::vector<std::optional<EdgeType>>& t) {
  LabeledGraph h;
  h.n = g.n;
  h.labels = g.labels;
  std::vector<EdgeType> types;
  for (std::size_t k = 0; k < g.edges.size(); ++k)
    if (t[k]) {
      h.edges.push_back(g.edges[k]);
      types.push_back(*t[k]);
    }
  return {h, types};
}

// Labels that dominate every label of g; empty if there is no such label.
inline std::optional<Composition> top_label(const LabeledGraph& g) {
  for (const auto& c : g.labels) {
    bool top = std::all_of(g.labels.begin(), g.labels.end(), [&](const Composition& a) { return dominates(c, a); });
    if (top) return c;
  }
  return std::nullopt;
}

inline std::string vertex_name(const LabeledGraph& g, int v) {
  return "vertex " + std::to_string(v) + " " + to_string(g.labels[v]);
}

inline std::string edge_name(const LabeledGraph& g, int k) {
  const auto& e = g.edges[k];
  return "edge " + std::to_string(k) + " (" + std::to_string(e.src) + "->" + std::to_string(e.dst) + " " +
         to_string(e.interval) + ")";
}

// ---------------------------------------------------------------------------
// Individual axioms

// A0 (outgoing placement) and, when dual is set, A0' (incoming placement).
inline CheckReport check_intervals(const LabeledGraph& g, bool dual) {
  CheckReport r;
  for (int k = 0; k < static_cast<int>(g.edges.size()); ++k) {
    const auto& e = g.edges[k];
    if (!out_placement(g.labels[e.src], e.interval))
      r.fail(edge_name(g, k) + ": interval does not straddle two blocks of the source label");
    else if (dual && !in_placement(g.labels[e.dst], e.interval))
      r.fail(edge_name(g, k) + ": interval does not straddle two blocks of the target label");
  }
  return r;
}

// A1: for every vertex and admissible interval, exactly one of (i) a unique
// outgoing edge with that label, (ii) an incoming edge with a sub-interval
// label from a dominating vertex. Dominance is weak; instances where strict
// dominance would change the verdict are recorded in notes.
inline CheckReport check_outgoing(const LabeledGraph& g, std::vector<std::string>* notes = nullptr) {
  CheckReport r;
  EdgeIndex idx(g.edges);
  auto in = g.in_edges();
  for (int v = 0; v < g.size(); ++v) {
    for (const auto& I : out_intervals(g.labels[v])) {
      auto it = idx.out.find({v, I});
      bool one = it != idx.out.end() && it->second.size() == 1;
      bool weak = false, strict = false;
      for (int k : in[v]) {
        const auto& e = g.edges[k];
        if (!I.contains(e.interval)) continue;
        if (dominates(g.labels[e.src], g.labels[v])) weak = true;
        if (strictly_dominates(g.labels[e.src], g.labels[v])) strict = true;
      }
      if (one == weak)
        r.fail(vertex_name(g, v) + " interval " + to_string(I) +
               (one ? ": has an outgoing edge and a dominating incoming sub-interval edge"
                    : ": neither a unique outgoing edge nor a dominating incoming sub-interval edge"));
      if (notes && weak != strict && notes->size() < 20)
        notes->push_back("A1(ii) at " + vertex_name(g, v) + " interval " + to_string(I) +
                         " holds only under weak dominance");
    }
  }
  return r;
}

// A1': for every vertex and admissible incoming interval, exactly one of (i) a
// unique incoming edge with that label, (ii) an outgoing edge with a
// sub-interval label to a vertex u whose reversed label dominates the reversed
// label of the vertex. This is A1 read through the Lusztig involution; plain
// "label of u strictly below" fails on CS(3,2). With literal set, the plain
// strict comparison is used instead.
inline CheckReport check_incoming(const LabeledGraph& g, bool literal = false) {
  CheckReport r;
  EdgeIndex idx(g.edges);
  auto out = g.out_edges();
  for (int v = 0; v < g.size(); ++v) {
    for (const auto& I : in_intervals(g.labels[v])) {
      bool one = idx.in_edges(v, I).size() == 1;
      bool alt = false;
      for (int k : out[v]) {
        const auto& e = g.edges[k];
        if (!I.contains(e.interval)) continue;
        const auto &b = g.labels[v], &c = g.labels[e.dst];
        if (literal ? strictly_dominates(b, c) : dominates(c.reversed(), b.reversed())) alt = true;
      }
      if (one == alt)
        r.fail(vertex_name(g, v) + " incoming interval " + to_string(I) +
               (one ? ": has an incoming edge and a dominated outgoing sub-interval edge"
                    : ": neither a unique incoming edge nor a dominated outgoing sub-interval edge"));
    }
  }
  return r;
}

// A2 and, when dual is set, A2'.
inline CheckReport check_labels(const LabeledGraph& g, bool dual) {
  CheckReport r;
  for (int k = 0; k < static_cast<int>(g.edges.size()); ++k) {
    const auto& e = g.edges[k];
    const auto &a = g.labels[e.src], &b = g.labels[e.dst];
    if (!infer_type(a, e.interval, b))
      r.fail(edge_name(g, k) + ": target label " + to_string(b) + " matches none of the three forms");
    else if (dual && !infer_type_incoming(a, e.interval, b))
      r.fail(edge_name(g, k) + ": source label " + to_string(a) + " matches none of the three inverse forms");
  }
  return r;
}

// A3: out-fans of increasing edges and in-fans of decreasing edges.
inline CheckReport check_fans(const LabeledGraph& g) {
  auto [h, types] = typed_part(g, infer_types(g));
  return fan_check(h, types);
}

// A4(a): L_n(G) is isomorphic to G.
inline CheckReport check_lusztig(const LabeledGraph& g) {
  CheckReport r;
  if (!isomorphic(g, lusztig_image(g))) r.fail("L_n(G) is not isomorphic to G");
  return r;
}

// A4(b): L_{n-1}(G_[1,n-1]) is isomorphic to G_[1,n-1].
inline CheckReport check_lusztig_head(const LabeledGraph& g) {
  CheckReport r;
  if (g.n < 2) return r;
  auto h = window_head(g);
  if (!isomorphic(h, lusztig_image(h))) r.fail("L_{n-1}(G_[1,n-1]) is not isomorphic to G_[1,n-1]");
  return r;
}

// The subgraph on labels of minimal length, with each edge relabelled by the
// index j of the crystal operator it represents.
inline std::pair<LabeledGraph, std::vector<int>> minimal_length_part(const LabeledGraph& g) {
  int s = g.labels.front().length();
  for (const auto& a : g.labels) s = std::min(s, a.length());
  std::vector<int> verts;
  for (int v = 0; v < g.size(); ++v)
    if (g.labels[v].length() == s) verts.push_back(v);
  LabeledGraph h = induced_subgraph(g, verts);
  for (auto& e : h.edges) {
    auto p = out_placement(h.labels[e.src], e.interval);
    int j = p ? p->j + 1 : 0;
    e.interval = {j, j};
  }
  h.n = s;
  return {h, verts};
}

// A5: G_s is isomorphic to B(lambda)_s with weights as labels and f_j as edges.
inline CheckReport check_top_crystal(const LabeledGraph& g) {
  CheckReport r;
  auto top = top_label(g);
  if (!top) {
    r.fail("no label dominates all others");
    return r;
  }
  if (!std::is_sorted(top->parts.rbegin(), top->parts.rend())) {
    r.fail("top label " + to_string(*top) + " is not a partition");
    return r;
  }
  auto [gs, verts] = minimal_length_part(g);
  Partition lam(top->parts);
  if (lam.length() != gs.n) {
    r.fail("top label " + to_string(*top) + " does not have minimal length " + std::to_string(gs.n));
    return r;
  }
  CrystalGraph b = build_crystal(lam, gs.n);
  LabeledGraph bg;
  bg.n = gs.n;
  try {
    for (const auto& w : b.weights) bg.labels.push_back(Composition(w));
  } catch (const std::invalid_argument&) {
    r.fail("crystal weights have zero entries");
    return r;
  }
  for (const auto& e : b.edges) bg.edges.push_back({e.src, e.dst, {e.i, e.i}});
  if (!isomorphic(gs, bg))
    r.fail("G_s on " + std::to_string(gs.size()) + " vertices is not isomorphic to B" + to_string(lam) + "_" +
           std::to_string(gs.n));
  return r;
}

inline CheckReport check_connected(const LabeledGraph& g) {
  CheckReport r;
  if (weak_components(g).size() > 1) r.fail("graph is not connected");
  return r;
}

// ---------------------------------------------------------------------------
// Commutation relations

enum class CommutationCase { C1a, C1b, C2ai, C2aii, C2bi, C2bii, C2biii, C3a, C3b, NoMatch, OutOfScope };

inline std::string to_string(CommutationCase c) {
  switch (c) {
    case CommutationCase::C1a: return "1a";
    case CommutationCase::C1b: return "1b";
    case CommutationCase::C2ai: return "2ai";
    case CommutationCase::C2aii: return "2aii";
    case CommutationCase::C2bi: return "2bi";
    case CommutationCase::C2bii: return "2bii";
    case CommutationCase::C2biii: return "2biii";
    case CommutationCase::C3a: return "3a";
    case CommutationCase::C3b: return "3b";
    case CommutationCase::NoMatch: return "NO_MATCH";
    case CommutationCase::OutOfScope: return "OUT_OF_SCOPE";
  }
  return "?";
}

inline constexpr CommutationCase kCommutationCases[] = {
    CommutationCase::C1a,  CommutationCase::C1b,    CommutationCase::C2ai,
    CommutationCase::C2aii, CommutationCase::C2bi,  CommutationCase::C2bii,
    CommutationCase::C2biii, CommutationCase::C3a,  CommutationCase::C3b};

// The cases a configuration may take after reversing all edges and
// mirroring all intervals.
inline std::vector<CommutationCase> dual_cases(CommutationCase c) {
  using C = CommutationCase;
  switch (c) {
    case C::C1a:
    case C::C1b: return {C::C1a, C::C1b};
    case C::C2aii: return {C::C3a};
    case C::C3a: return {C::C2aii};
    case C::C2bii: return {C::C3b};
    case C::C3b: return {C::C2bii};
    default: return {c};
  }
}

// A matched configuration: the vertex where it closes and the two labels of
// the edges entering it along the two sides.
struct CommutationMatch {
  CommutationCase kind = CommutationCase::NoMatch;
  int sink = -1;
  Interval last_a;
  Interval last_b;
};

// Local pattern matcher over a labelled graph with inferred edge types.
class CommutationMatcher {
 public:
  explicit CommutationMatcher(const LabeledGraph& g) : g_(g), idx_(g.edges), types_(infer_types(g)) {}

  const LabeledGraph& graph() const { return g_; }

  // Orders the pair as in the relations: nested pairs put the longer
  // interval first, other pairs the one with the smaller minimum.
  static std::pair<Interval, Interval> normalise(Interval I, Interval J) {
    if (J.contains(I) || (!I.contains(J) && J.lo < I.lo)) std::swap(I, J);
    return {I, J};
  }

  // Classifies the configuration at v spanned by the outgoing edges I and J:
  // the first case whose pattern matches, NO_MATCH when the pair lies in the
  // scope of the relations but no pattern matches, OUT_OF_SCOPE otherwise.
  CommutationMatch classify(int v, const Interval& I0, const Interval& J0) const {
    if (!step(v, I0) || !step(v, J0))
      throw std::invalid_argument("both intervals must label edges out of vertex " + std::to_string(v));
    if (I0 == J0) throw std::invalid_argument("the two intervals must differ");
    auto [I, J] = normalise(I0, J0);
    if (!in_scope(v, I, J)) return {CommutationCase::OutOfScope, -1, {}, {}};
    for (auto c : kCommutationCases)
      if (auto m = match(v, I, J, c)) return *m;
    return {CommutationCase::NoMatch, -1, {}, {}};
  }

  bool in_scope(int v, const Interval& I, const Interval& J) const {
    if (I.contains(J)) return J.size() == I.size() - 2;
    if (!I.intersects(J)) return true;
    auto t = type_of(v, I);
    return t && *t != EdgeType::Increasing;
  }

  // Matches one specific case on the ordered pair (I, J).
  std::optional<CommutationMatch> match(int T, const Interval& I, const Interval& J, CommutationCase c) const {
    using C = CommutationCase;
    using E = EdgeType;
    const int i = I.lo, m = (I.size() - 1) / 2, j = J.lo, l = (J.size() - 1) / 2;
    auto TI = step(T, I), TJ = step(T, J);
    if (!TI || !TJ) return std::nullopt;
    auto tI = type_of(T, I), tJ = type_of(T, J);
    auto is = [](std::optional<EdgeType> t, std::initializer_list<EdgeType> allowed) {
      return t && std::find(allowed.begin(), allowed.end(), *t) != allowed.end();
    };
    const auto P = {E::Preserving};
    const auto PD = {E::Preserving, E::Decreasing};
    const auto PI = {E::Preserving, E::Increasing};
    const auto D = {E::Decreasing};
    const auto Inc = {E::Increasing};
    bool nested = I.contains(J);
    bool disjoint = !I.intersects(J);
    bool overlap = !disjoint && !nested;

    switch (c) {
      case C::C1a:
      case C::C1b: {
        if (!disjoint) return std::nullopt;
        auto S1 = step(*TI, J), S2 = step(*TJ, I);
        if (!S1 || !S2 || *S1 != *S2) return std::nullopt;
        auto tJp = type_of(*TI, J), tIp = type_of(*TJ, I);
        bool extra = I.hi + 1 == J.lo && !idx_.in_edges(T, {i, i + 2 * m + 2}).empty() &&
                     step(*S1, {j - 2, j + 2 * l}).has_value();
        bool ok = c == C::C1b ? extra && is(tI, Inc) && is(tJp, D) && is(tJ, P) && is(tIp, P)
                              : !extra && tI && tIp && tJ && tJp && *tI == *tIp && *tJ == *tJp;
        if (!ok) return std::nullopt;
        return CommutationMatch{c, *S1, J, I};
      }
      case C::C2ai: {
        if (!overlap || is(tI, Inc) || I.size() <= 3) return std::nullopt;
        Interval Jp{j - 1, j + 2 * l + 1}, Ip{i + 1, i + 2 * m - 1};
        auto S1 = step(*TI, Jp), S2 = step(*TJ, Ip);
        if (!S1 || !S2 || *S1 != *S2) return std::nullopt;
        if (!is(tI, P) || !is(tJ, P) || !is(type_of(*TI, Jp), P) || !is(type_of(*TJ, Ip), P)) return std::nullopt;
        return CommutationMatch{c, *S1, Jp, Ip};
      }
      case C::C2aii: {
        if (!overlap || is(tI, Inc) || I.size() != 3 || j != i + 2) return std::nullopt;
        Interval Jp{i + 1, i + 3 + 2 * l};
        auto S = step(*TI, Jp);
        if (!S || *S != *TJ) return std::nullopt;
        if (!is(tI, P) || !is(tJ, D) || !is(type_of(*TI, Jp), D)) return std::nullopt;
        return CommutationMatch{c, *TJ, J, Jp};
      }
      case C::C2bi: {
        if (!overlap || is(tI, Inc) || I.size() <= 3) return std::nullopt;
        Interval Ip{i + 1, i + 2 * m - 1}, I2{i, i + 2 * m - 2}, J2{j - 1, j + 2 * l - 1}, J3{j - 2, j + 2 * l};
        auto SJ = step(*TI, J), SI = step(*TJ, Ip);
        if (!SJ || !SI) return std::nullopt;
        auto X = step(*SJ, J2), Y = step(*SI, I2);
        if (!X || !Y) return std::nullopt;
        auto Z1 = step(*X, I2), Z2 = step(*Y, J3);
        if (!Z1 || !Z2 || *Z1 != *Z2) return std::nullopt;
        if (!is(tI, PD) || !is(type_of(*SI, I2), PD)) return std::nullopt;
        if (!is(type_of(*TI, J), PI) || !is(type_of(*Y, J3), PI)) return std::nullopt;
        if (!is(tJ, P) || !is(type_of(*TJ, Ip), P) || !is(type_of(*SJ, J2), P) || !is(type_of(*X, I2), P))
          return std::nullopt;
        return CommutationMatch{c, *Z1, I2, J3};
      }
      case C::C2bii: {
        if (!overlap || is(tI, Inc) || I.size() != 3 || j != i + 2) return std::nullopt;
        Interval Ip{i, i + 2 + 2 * l}, J2{i + 1, i + 1 + 2 * l};
        auto SJ = step(*TI, J), Z1 = step(*TJ, Ip);
        if (!SJ || !Z1) return std::nullopt;
        auto Z2 = step(*SJ, J2);
        if (!Z2 || *Z1 != *Z2) return std::nullopt;
        if (!is(tI, PD) || !is(tJ, D) || !is(type_of(*SJ, J2), D)) return std::nullopt;
        return CommutationMatch{c, *Z1, J2, Ip};
      }
      case C::C2biii: {
        if (!overlap || is(tI, Inc)) return std::nullopt;
        auto S1 = step(*TI, J), S2 = step(*TJ, I);
        if (!S1 || !S2 || *S1 != *S2) return std::nullopt;
        auto tJp = type_of(*TI, J), tIp = type_of(*TJ, I);
        if (!tI || !tIp || !tJ || !tJp || *tI != *tIp || *tJ != *tJp) return std::nullopt;
        if (!is(tI, PD) || !is(tJ, PI)) return std::nullopt;
        return CommutationMatch{c, *S1, J, I};
      }
      case C::C3a: {
        if (!nested || J != Interval{i + 1, i + 2 * m - 1}) return std::nullopt;
        Interval Jp{i + 2 * m - 1, i + 2 * m + 1};
        auto S = step(*TI, Jp);
        if (!S || *S != *TJ) return std::nullopt;
        if (!is(tI, Inc) || !is(tJ, Inc) || !is(type_of(*TI, Jp), P)) return std::nullopt;
        return CommutationMatch{c, *TJ, J, Jp};
      }
      case C::C3b: {
        if (!nested || J != Interval{i + 1, i + 2 * m - 1}) return std::nullopt;
        Interval Ip{i, i + 2 * m - 2}, J2{i + 2 * m - 2, i + 2 * m};
        auto SI = step(*TJ, Ip), Z1 = step(*TI, Ip);
        if (!SI || !Z1) return std::nullopt;
        auto Z2 = step(*SI, J2);
        if (!Z2 || *Z1 != *Z2) return std::nullopt;
        if (!is(tJ, Inc) || !is(type_of(*TI, Ip), Inc) || !is(type_of(*SI, J2), PI)) return std::nullopt;
        return CommutationMatch{c, *Z1, Ip, J2};
      }
      default: return std::nullopt;
    }
  }

  // Target of the first edge out of v labelled I.
  std::optional<int> step(int v, const Interval& I) const {
    auto it = idx_.out.find({v, I});
    if (it == idx_.out.end()) return std::nullopt;
    return g_.edges[it->second.front()].dst;
  }

  std::optional<EdgeType> type_of(int v, const Interval& I) const {
    auto it = idx_.out.find({v, I});
    if (it == idx_.out.end()) return std::nullopt;
    return types_[it->second.front()];
  }

 private:
  const LabeledGraph& g_;
  EdgeIndex idx_;
  std::vector<std::optional<EdgeType>> types_;
};

inline CommutationCase commutation_case(const LabeledGraph& g, int v, const Interval& I, const Interval& J) {
  return CommutationMatcher(g).classify(v, I, J).kind;
}

// Distinct labels of the edges out of v, in increasing order.
inline std::vector<Interval> out_labels(const LabeledGraph& g, int v) {
  std::set<Interval> s;
  for (const auto& e : g.edges)
    if (e.src == v) s.insert(e.interval);
  return {s.begin(), s.end()};
}

struct CommutationTally {
  std::map<CommutationCase, int> counts;
  CheckReport report;  // one failure per NO_MATCH
};

// Classifies every pair of distinct outgoing labels at every vertex.
inline CommutationTally commutation_scan(const LabeledGraph& g) {
  CommutationTally t;
  CommutationMatcher mt(g);
  for (int v = 0; v < g.size(); ++v) {
    auto labels = out_labels(g, v);
    for (std::size_t a = 0; a < labels.size(); ++a)
      for (std::size_t b = a + 1; b < labels.size(); ++b) {
        auto m = mt.classify(v, labels[a], labels[b]);
        ++t.counts[m.kind];
        if (m.kind == CommutationCase::NoMatch)
          t.report.fail(vertex_name(g, v) + " pair " + to_string(labels[a]) + " " + to_string(labels[b]) +
                        ": no commutation relation matches");
      }
  }
  return t;
}

// Every in-scope configuration, read backwards in L_n(G) from the vertex where
// it closes, matches the dual case.
inline CheckReport commutation_duality_check(const LabeledGraph& g) {
  CheckReport r;
  CommutationMatcher mt(g);
  LabeledGraph lg = lusztig_image(g);
  CommutationMatcher ml(lg);
  for (int v = 0; v < g.size(); ++v) {
    auto labels = out_labels(g, v);
    for (std::size_t a = 0; a < labels.size(); ++a)
      for (std::size_t b = a + 1; b < labels.size(); ++b) {
        auto m = mt.classify(v, labels[a], labels[b]);
        if (m.kind == CommutationCase::OutOfScope || m.kind == CommutationCase::NoMatch) continue;
        auto [I, J] = CommutationMatcher::normalise(mirror(m.last_a, g.n), mirror(m.last_b, g.n));
        bool found = false;
        for (auto c : dual_cases(m.kind))
          if (ml.step(m.sink, I) && ml.step(m.sink, J) && ml.match(m.sink, I, J, c)) found = true;
        if (!found)
          r.fail(vertex_name(g, v) + " case " + to_string(m.kind) + ": dual configuration at vertex " +
                 std::to_string(m.sink) + " does not match");
      }
  }
  return r;
}

// L3: commutations for outgoing pairs, their duals for incoming pairs, and the
// two-cycle rule for increasing (resp. decreasing) edges on three letters.
inline CheckReport check_commutations(const LabeledGraph& g) {
  CheckReport r;
  r.merge(commutation_scan(g).report, "outgoing: ");
  r.merge(commutation_scan(lusztig_image(g)).report, "incoming (dual): ");
  EdgeIndex idx(g.edges);
  auto types = infer_types(g);
  for (int k = 0; k < static_cast<int>(g.edges.size()); ++k) {
    const auto& e = g.edges[k];
    if (e.interval.size() != 3 || !types[k]) continue;
    if (*types[k] == EdgeType::Increasing) {
      Interval J{e.interval.lo + 1, e.interval.hi + 1};
      if (!idx.has_edge(e.dst, J, e.src, g.edges))
        r.fail(edge_name(g, k) + ": increasing edge without the return edge " + to_string(J));
    } else if (*types[k] == EdgeType::Decreasing) {
      Interval I{e.interval.lo - 1, e.interval.hi - 1};
      if (!idx.has_edge(e.dst, I, e.src, g.edges))
        r.fail(edge_name(g, k) + ": decreasing edge without the return edge " + to_string(I));
    }
  }
  return r;
}

// L4: strings through edges of G_s are made of length-preserving edges whose
// intervals shift by one at each step, for as long as the string lengths
// (phi from the source, epsilon from the target) allow.
inline CheckReport check_strings(const LabeledGraph& g) {
  CheckReport r;
  EdgeIndex idx(g.edges);
  auto types = infer_types(g);
  int s = g.labels.front().length();
  for (const auto& a : g.labels) s = std::min(s, a.length());
  auto typed_out = [&](int v, const Interval& I) -> std::optional<std::pair<int, std::optional<EdgeType>>> {
    auto it = idx.out.find({v, I});
    if (it == idx.out.end()) return std::nullopt;
    return std::make_pair(g.edges[it->second.front()].dst, types[it->second.front()]);
  };
  auto typed_in = [&](int v, const Interval& I) -> std::optional<std::pair<int, std::optional<EdgeType>>> {
    auto in = idx.in_edges(v, I);
    if (in.empty()) return std::nullopt;
    return std::make_pair(g.edges[in.front()].src, types[in.front()]);
  };
  for (int k = 0; k < static_cast<int>(g.edges.size()); ++k) {
    const auto& e = g.edges[k];
    const auto &a = g.labels[e.src], &b = g.labels[e.dst];
    if (a.length() != s || b.length() != s) continue;
    auto p = out_placement(a, e.interval);
    if (!p) continue;
    const int i = e.interval.lo, w = e.interval.size() - 1;
    int phi = i - a.blocks()[p->j].lo + 1;
    int cur = e.src;
    for (int q = 0; q < phi; ++q) {
      Interval Iq{i - q, i - q + w};
      auto nx = typed_out(cur, Iq);
      if (!nx || nx->second != EdgeType::Preserving) {
        r.fail(edge_name(g, k) + ": f-string step " + std::to_string(q) + " " + to_string(Iq) +
               (nx ? " is not length-preserving" : " is missing"));
        break;
      }
      cur = nx->first;
    }
    int eps = b.blocks()[p->j + 1].hi - e.interval.hi;
    cur = e.dst;
    for (int q = 0; q < eps; ++q) {
      Interval Jq{i + q, i + q + w};
      auto pv = typed_in(cur, Jq);
      if (!pv || pv->second != EdgeType::Preserving) {
        r.fail(edge_name(g, k) + ": e-string step " + std::to_string(q) + " " + to_string(Jq) +
               (pv ? " is not length-preserving" : " is missing"));
        break;
      }
      cur = pv->first;
    }
  }
  return r;
}

// L5 (and the in/out property of CS-graphs).
inline CheckReport check_edge_types(const LabeledGraph& g) {
  CheckReport r;
  auto top = top_label(g);
  if (!top) {
    r.fail("no label dominates all others");
    return r;
  }
  auto [h, types] = typed_part(g, infer_types(g));
  return in_out_check(h, types, *top);
}

// ---------------------------------------------------------------------------
// The three systems

inline AxiomReport verify_gl(const LabeledGraph& g) {
  validate_graph(g);
  AxiomReport rep;
  rep.system = AxiomSystem::GL;
  rep.add("connected", check_connected(g));
  rep.add("A0", check_intervals(g, false));
  rep.add("A1", check_outgoing(g, &rep.notes));
  rep.add("A2", check_labels(g, false));
  rep.add("A3", check_fans(g));
  CheckReport a4 = check_lusztig(g);
  a4.merge(check_lusztig_head(g));
  rep.add("A4", a4);
  rep.add("A5", check_top_crystal(g));
  return rep;
}

// S6: unique top vertex, dominance bound, the f-paths to the corners and
// connectivity of G_[1,n-1] together with those paths.
inline CheckReport check_connectivity_paths(const LabeledGraph& g, const Composition& lam) {
  CheckReport r;
  int holders = 0;
  for (int v = 0; v < g.size(); ++v) {
    if (g.labels[v] == lam) ++holders;
    else if (!dominates(lam, g.labels[v]))
      r.fail(vertex_name(g, v) + " is not dominated by " + to_string(lam));
  }
  if (holders != 1) {
    r.fail(std::to_string(holders) + " vertices carry the top label " + to_string(lam));
    return r;
  }
  int u = 0;
  while (g.labels[u] != lam) ++u;
  auto types = infer_types(g);
  auto out = g.out_edges();
  // f_j: the unique preserving edge whose interval straddles blocks j, j+1
  auto f = [&](int v, int jj) {
    int found = -1, count = 0;
    for (int k : out[v]) {
      auto p = out_placement(g.labels[v], g.edges[k].interval);
      if (types[k] == EdgeType::Preserving && p && p->j + 1 == jj) {
        found = k;
        ++count;
      }
    }
    return count == 1 ? found : -1;
  };
  LabeledGraph head = window_head(g);
  std::vector<LabeledEdge> joined = head.edges;
  int s = lam.length();
  Partition lp(lam.parts);
  for (const auto& [minus, row] : remove_corner(lp)) {
    int r1 = row + 1, v = u;
    bool ok = true;
    for (int jj = r1; jj <= s - 1; ++jj) {
      int k = f(v, jj);
      if (k < 0) {
        r.fail("f_" + std::to_string(jj) + " undefined on the path for corner row " + std::to_string(r1));
        ok = false;
        break;
      }
      joined.push_back(g.edges[k]);
      v = g.edges[k].dst;
    }
    if (!ok) continue;
    std::vector<int> want = lam.parts;
    --want[row];
    ++want[s - 1];
    if (g.labels[v].parts != want)
      r.fail("path for corner row " + std::to_string(r1) + " ends at " + vertex_name(g, v));
  }
  if (weak_components(g.size(), joined).size() > 1)
    r.fail("G_[1,n-1] together with the f-paths is not connected");
  return r;
}

inline AxiomReport verify_sn(const LabeledGraph& g);

// S5: the components of G_[1,n-1] satisfy the system themselves and their top
// labels are the partitions obtained by removing one corner.
inline CheckReport check_branching(const LabeledGraph& g, const Composition& lam) {
  CheckReport r;
  if (g.n <= 1) return r;
  LabeledGraph head = window_head(g);
  std::multiset<Composition> tops, want;
  for (const auto& [minus, row] : remove_corner(Partition(lam.parts))) want.insert(Composition(minus.parts));
  for (const auto& comp : weak_components(head)) {
    LabeledGraph c = induced_subgraph(head, comp);
    AxiomReport sub = verify_sn(c);
    if (!sub.pass()) {
      const auto& v = sub.at(sub.first_failure());
      r.fail("component of G_[1,n-1] at vertex " + std::to_string(comp.front()) + " fails " + v.axiom + ": " +
             v.witness);
    }
    auto t = top_label(c);
    if (!t) r.fail("component of G_[1,n-1] at vertex " + std::to_string(comp.front()) + " has no top label");
    else tops.insert(*t);
  }
  if (tops != want) r.fail("top labels of G_[1,n-1] do not match the corners of " + to_string(lam));
  return r;
}

inline AxiomReport verify_sn(const LabeledGraph& g) {
  validate_graph(g);
  AxiomReport rep;
  rep.system = AxiomSystem::SN;
  rep.add("connected", check_connected(g));
  rep.add("S0", check_intervals(g, false));
  rep.add("S1", check_outgoing(g, &rep.notes));
  rep.add("S2", check_labels(g, false));
  rep.add("S3", check_fans(g));
  rep.add("S4", check_lusztig(g));
  auto top = top_label(g);
  CheckReport s5, s6;
  if (!top || !std::is_sorted(top->parts.rbegin(), top->parts.rend())) {
    s5.fail("no partition label dominates all others");
    s6.fail("no partition label dominates all others");
  } else {
    s5 = check_branching(g, *top);
    s6 = check_connectivity_paths(g, *top);
  }
  rep.add("S5", s5);
  rep.add("S6", s6);
  return rep;
}

inline AxiomReport verify_local(const LabeledGraph& g) {
  validate_graph(g);
  AxiomReport rep;
  rep.system = AxiomSystem::LOCAL;
  rep.add("connected", check_connected(g));
  rep.add("L0", check_intervals(g, true));
  CheckReport l1 = check_outgoing(g, &rep.notes);
  l1.merge(check_incoming(g));
  rep.add("L1", l1);
  rep.add("L2", check_labels(g, true));
  rep.add("L3", check_commutations(g));
  rep.add("L4", check_strings(g));
  rep.add("L5", check_edge_types(g));
  return rep;
}

inline AxiomReport verify(AxiomSystem s, const LabeledGraph& g) {
  switch (s) {
    case AxiomSystem::GL: return verify_gl(g);
    case AxiomSystem::SN: return verify_sn(g);
    case AxiomSystem::LOCAL: return verify_local(g);
  }
  throw std::invalid_argument("unknown axiom system");
}

}  // namespace cskit

#endif  // CSKIT_AXIOMS_HPP

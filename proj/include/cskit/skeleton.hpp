#ifndef CSKIT_SKELETON_HPP
#define CSKIT_SKELETON_HPP

// The crystal skeleton CS(lambda): standard tableaux joined by edges labelled
// with Dyck pattern intervals.

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "crystal.hpp"
#include "labeled_graph.hpp"
#include "tableau.hpp"

namespace cskit {

struct SkeletonEdge {
  int src = 0;
  int dst = 0;
  Interval interval;
  std::optional<Cycle> cycle;
  EdgeType type = EdgeType::Preserving;
};

struct SkeletonGraph {
  Partition shape;
  int n = 0;
  std::vector<Tableau> vertices;
  std::vector<Composition> descents;
  std::vector<SkeletonEdge> edges;
  std::map<Tableau, int> index;

  int id_of(const Tableau& t) const {
    auto it = index.find(t);
    return it == index.end() ? -1 : it->second;
  }

  void add_vertex(const Tableau& t) {
    index[t] = static_cast<int>(vertices.size());
    vertices.push_back(t);
    descents.push_back(descent_composition(t));
  }

  void sort_edges() {
    std::sort(edges.begin(), edges.end(), [](const SkeletonEdge& a, const SkeletonEdge& b) {
      return std::tie(a.src, a.interval, a.dst) < std::tie(b.src, b.interval, b.dst);
    });
  }

  LabeledGraph labeled() const {
    LabeledGraph g;
    g.n = n;
    g.labels = descents;
    for (const auto& e : edges) g.edges.push_back({e.src, e.dst, e.interval});
    return g;
  }

  std::vector<EdgeType> types() const {
    std::vector<EdgeType> t;
    for (const auto& e : edges) t.push_back(e.type);
    return t;
  }
};

inline void check_odd_interval(const Interval& I, int N) {
  if (I.size() < 3 || I.size() % 2 == 0)
    throw std::invalid_argument("interval must have odd length at least 3: " + to_string(I));
  if (I.lo < 1 || I.hi > N) throw std::invalid_argument("interval out of range: " + to_string(I));
}

// The two-row tableau with bottom row [i, i+m] and top row [i+m+1, i+2m].
inline Tableau dyck_tableau(const Interval& I) {
  int m = (I.size() - 1) / 2;
  std::vector<int> bottom, top;
  for (int x = I.lo; x <= I.lo + m; ++x) bottom.push_back(x);
  for (int x = I.lo + m + 1; x <= I.hi; ++x) top.push_back(x);
  return Tableau({bottom, top});
}

inline bool is_dyck_interval(const Word& pi, const Interval& I) {
  check_odd_interval(I, static_cast<int>(pi.size()));
  return insertion_tableau(restrict_word(pi, I)) == dyck_tableau(I);
}

// Bracketing characterization: e_i(w) is undefined and f_i((i+1) w) is
// undefined, where w is the destandardized restriction.
inline bool is_dyck_interval_bracket(const Word& pi, const Interval& I) {
  check_odd_interval(I, static_cast<int>(pi.size()));
  Word w;
  try {
    w = destandardize_dyck(restrict_word(pi, I), I);
  } catch (const std::invalid_argument&) {
    return false;
  }
  Word pre{I.lo + 1};
  pre.insert(pre.end(), w.begin(), w.end());
  return !e(w, I.lo) && !f(pre, I.lo);
}

inline std::vector<Interval> dyck_intervals(const Word& pi) {
  std::vector<Interval> out;
  int N = static_cast<int>(pi.size());
  for (int lo = 1; lo <= N; ++lo)
    for (int hi = lo + 2; hi <= N; hi += 2)
      if (is_dyck_interval(pi, {lo, hi})) out.push_back({lo, hi});
  return out;
}

inline std::pair<Tableau, Cycle> apply_edge(const Tableau& t, const Interval& I) {
  Word pi = reading_word(t);
  if (!is_dyck_interval(pi, I)) throw std::invalid_argument("not a Dyck pattern interval: " + to_string(I));
  Word piI = restrict_word(pi, I);
  auto s = bracket(destandardize_dyck(piI, I), I.lo);
  int m = (I.size() - 1) / 2;
  int letter = piI[s.p];
  Cycle c = decreasing_cycle(letter + m, letter);
  return {c.apply(t), c};
}

// T has a rectangle on J when jdt(T_J) has shape (|J|/2, |J|/2); intervals
// leaving [1,n] never do.
inline bool has_rectangle(const Tableau& t, const Interval& J) {
  int n = t.num_cells();
  if (J.lo < 1 || J.hi > n || J.size() % 2 != 0) return false;
  int h = J.size() / 2;
  return jdt_rectify(restrict(t, J)).shape() == Partition({h, h});
}

inline EdgeType classify_edge(const Tableau& t, const Interval& I) {
  if (!is_dyck_interval(reading_word(t), I))
    throw std::invalid_argument("not a Dyck pattern interval: " + to_string(I));
  if (has_rectangle(t, {I.lo, I.hi + 1})) return EdgeType::Increasing;
  if (has_rectangle(t, {I.lo - 1, I.hi})) return EdgeType::Decreasing;
  return EdgeType::Preserving;
}

// Same classification from relative letter orders and the cycle extremes.
inline EdgeType classify_edge_pattern(const Tableau& t, const Interval& I) {
  Word pi = reading_word(t);
  int n = static_cast<int>(pi.size());
  Cycle c = apply_edge(t, I).second;
  int i = I.lo, m = (I.size() - 1) / 2;
  if (I.hi + 1 <= n) {
    Word sub;
    for (int x : pi)
      if (x == i + m || x == i + 2 * m || x == i + 2 * m + 1) sub.push_back(x);
    if (sub == Word{i + 2 * m, i + 2 * m + 1, i + m} && c == decreasing_cycle(i + 2 * m, i + m))
      return EdgeType::Increasing;
  }
  if (i - 1 >= 1) {
    Word sub;
    for (int x : pi)
      if (x == i - 1 || x == i || x == i + 1) sub.push_back(x);
    if (sub == Word{i, i - 1, i + 1} && c == decreasing_cycle(i + m, i)) return EdgeType::Decreasing;
  }
  return EdgeType::Preserving;
}

// Descent composition of the target, from the source composition, the edge
// interval and its type.
inline Composition descent_transition(const Composition& alpha, const Interval& I, EdgeType type) {
  check_odd_interval(I, alpha.size());
  auto bl = alpha.blocks();
  int m = (I.size() - 1) / 2, k = I.lo + m;
  int j = -1;
  for (std::size_t q = 0; q < bl.size(); ++q)
    if (bl[q].contains(k)) j = static_cast<int>(q);
  if (bl[j].hi != k || bl[j].lo > I.lo || j + 1 >= static_cast<int>(bl.size()) || bl[j + 1].hi < I.hi)
    throw std::invalid_argument("interval " + to_string(I) + " is not placed across two blocks of " +
                                to_string(alpha));
  Interval next = bl[j + 1];
  switch (type) {
    case EdgeType::Preserving:
      bl[j] = {bl[j].lo, k - 1};
      bl[j + 1] = {k, next.hi};
      break;
    case EdgeType::Increasing:
      if (next.hi == I.hi)
        throw std::invalid_argument("increasing edge needs letters after the interval in its block");
      bl[j] = {bl[j].lo, k - 1};
      bl[j + 1] = {k, I.hi};
      bl.insert(bl.begin() + j + 2, Interval{I.hi + 1, next.hi});
      break;
    case EdgeType::Decreasing:
      if (bl[j].lo != I.lo || j == 0)
        throw std::invalid_argument("decreasing edge needs its lower half to be a whole block");
      bl[j - 1] = {bl[j - 1].lo, k - 1};
      bl[j] = {k, k - 1};  // empty, dropped below
      bl[j + 1] = {k, next.hi};
      break;
  }
  return Composition::from_blocks(bl);
}

inline SkeletonGraph build_skeleton_direct(const Partition& lam) {
  SkeletonGraph g;
  g.shape = lam;
  g.n = lam.size();
  for (const auto& t : enumerate_syt(lam)) g.add_vertex(t);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const Tableau& t = g.vertices[v];
    for (const auto& I : dyck_intervals(reading_word(t))) {
      auto [t2, c] = apply_edge(t, I);
      int dst = g.id_of(t2);
      if (dst < 0) throw std::logic_error("edge left SYT(lambda)");
      g.edges.push_back({static_cast<int>(v), dst, I, c, classify_edge(t, I)});
    }
  }
  g.sort_edges();
  return g;
}

// Oracle: contract the quasi-crystal components of B(lambda)_{|lambda|}.
inline SkeletonGraph build_skeleton_contraction(const Partition& lam) {
  SkeletonGraph g;
  g.shape = lam;
  g.n = lam.size();
  for (const auto& t : enumerate_syt(lam)) g.add_vertex(t);
  if (g.n == 0) return g;
  CrystalGraph b = build_crystal(lam, g.n);
  std::map<std::pair<int, Interval>, std::size_t> seen;
  for (const auto& ed : b.edges) {
    Word w = reading_word(b.vertices[ed.src]);
    if (quasi_edge(w, ed.i)) continue;
    auto s = bracket(w, ed.i);
    int pp = standardize(w)[s.p];
    Interval I{pp - s.n_left, pp + s.n_left + 2 * s.n_right};
    int src = g.id_of(standardize(b.vertices[ed.src]));
    int dst = g.id_of(standardize(b.vertices[ed.dst]));
    Cycle c = cycle_of(w, ed.i);
    auto [it, fresh] = seen.try_emplace({src, I}, g.edges.size());
    if (!fresh) {
      const auto& old = g.edges[it->second];
      if (old.dst != dst || old.cycle != c)
        throw std::logic_error("contraction: inconsistent targets for one interval");
      continue;
    }
    auto type = type_from_lengths(g.descents[src], g.descents[dst]);
    if (!type) throw std::logic_error("contraction: descent length jumped by more than one");
    g.edges.push_back({src, dst, I, c, *type});
  }
  g.sort_edges();
  return g;
}

// Vertex- and edge-label identity (tableaux, intervals, cycles, types).
inline CheckReport compare_skeletons(const SkeletonGraph& a, const SkeletonGraph& b) {
  CheckReport rep;
  if (a.vertices != b.vertices) rep.fail("vertex lists differ");
  using Key = std::tuple<Tableau, Interval, Tableau, std::optional<Cycle>, EdgeType>;
  auto keys = [](const SkeletonGraph& g) {
    std::multiset<Key> out;
    for (const auto& e : g.edges)
      out.insert({g.vertices[e.src], e.interval, g.vertices[e.dst], e.cycle, e.type});
    return out;
  };
  auto ka = keys(a), kb = keys(b);
  if (ka != kb) {
    std::vector<Key> only_a, only_b;
    std::set_difference(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(only_a));
    std::set_difference(kb.begin(), kb.end(), ka.begin(), ka.end(), std::back_inserter(only_b));
    for (auto& k : only_a)
      rep.fail("only in first: " + to_string(reading_word(std::get<0>(k))) + " " + to_string(std::get<1>(k)));
    for (auto& k : only_b)
      rep.fail("only in second: " + to_string(reading_word(std::get<0>(k))) + " " + to_string(std::get<1>(k)));
  }
  return rep;
}

// Per-edge invariants: Dyck validity, both classifiers agree, the descent
// transition predicts the target, and nested intervals behave as expected.
inline CheckReport edge_invariants_check(const SkeletonGraph& g) {
  CheckReport rep;
  std::map<std::pair<int, Interval>, EdgeType> out_type;
  std::map<std::pair<int, Interval>, std::vector<EdgeType>> in_type;
  for (const auto& e : g.edges) {
    out_type[{e.src, e.interval}] = e.type;
    in_type[{e.dst, e.interval}].push_back(e.type);
  }
  for (const auto& e : g.edges) {
    const Tableau& t = g.vertices[e.src];
    std::string where = to_string(reading_word(t)) + " " + to_string(e.interval);
    if (!is_dyck_interval(reading_word(t), e.interval) ||
        !is_dyck_interval_bracket(reading_word(t), e.interval)) {
      rep.fail("not a Dyck interval: " + where);
      continue;
    }
    if (classify_edge_pattern(t, e.interval) != e.type) rep.fail("pattern classifier disagrees: " + where);
    try {
      if (descent_transition(g.descents[e.src], e.interval, e.type) != g.descents[e.dst])
        rep.fail("descent transition mismatch: " + where);
    } catch (const std::invalid_argument& ex) {
      rep.fail(std::string("descent transition rejected: ") + where + ": " + ex.what());
    }
    if (e.interval.size() == 3 && e.cycle && e.cycle->values.size() != 2)
      rep.fail("|I|=3 edge without a transposition: " + where);
    if (e.interval.size() > 3) {
      Interval inner{e.interval.lo + 1, e.interval.hi - 1};
      auto it = out_type.find({e.src, inner});
      if (it == out_type.end() || it->second != EdgeType::Increasing)
        rep.fail("nested interval out of source not increasing: " + where);
      auto jt = in_type.find({e.dst, inner});
      if (jt == in_type.end() ||
          std::find(jt->second.begin(), jt->second.end(), EdgeType::Decreasing) == jt->second.end())
        rep.fail("nested interval into target not decreasing: " + where);
    }
  }
  // at most one edge per (source, interval)
  std::map<std::pair<int, Interval>, int> count;
  for (const auto& e : g.edges)
    if (++count[{e.src, e.interval}] > 1) rep.fail("duplicate edge label at vertex " + std::to_string(e.src));
  return rep;
}

// Dual equivalence: the elementary relation D_i on a standard tableau.
inline Tableau elementary_dual(const Tableau& t, int i) {
  Word pi = reading_word(t);
  int pa = -1, pb = -1, pc = -1;
  for (int p = 0; p < static_cast<int>(pi.size()); ++p) {
    if (pi[p] == i - 1) pa = p;
    if (pi[p] == i) pb = p;
    if (pi[p] == i + 1) pc = p;
  }
  std::vector<std::pair<int, int>> order{{pa, i - 1}, {pb, i}, {pc, i + 1}};
  std::sort(order.begin(), order.end());
  int middle = order[1].second;
  Cycle swap;
  if (middle == i + 1) swap.values = {i, i - 1};
  else if (middle == i - 1) swap.values = {i + 1, i};
  else return t;
  return swap.apply(t);
}

struct DeEdge {
  int a = 0;
  int b = 0;
  int i = 0;
  auto operator<=>(const DeEdge&) const = default;
};

inline std::vector<DeEdge> dual_equivalence_graph(const SkeletonGraph& g) {
  std::set<DeEdge> out;
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    for (int i = 2; i < g.n; ++i) {
      int u = g.id_of(elementary_dual(g.vertices[v], i));
      if (u < 0) throw std::logic_error("dual equivalence left SYT(lambda)");
      if (u != static_cast<int>(v))
        out.insert({std::min<int>(u, v), std::max<int>(u, v), i});
    }
  return {out.begin(), out.end()};
}

// The undirected support of the |I| = 3 edges is exactly DE(lambda), with
// D_i matching the interval [i-1, i+1].
inline CheckReport de_subgraph_check(const SkeletonGraph& g) {
  CheckReport rep;
  std::set<DeEdge> from_cs;
  for (const auto& e : g.edges)
    if (e.interval.size() == 3)
      from_cs.insert({std::min(e.src, e.dst), std::max(e.src, e.dst), e.interval.lo + 1});
  auto de = dual_equivalence_graph(g);
  std::set<DeEdge> from_de(de.begin(), de.end());
  if (from_cs != from_de)
    rep.fail("short edges (" + std::to_string(from_cs.size()) + ") differ from DE edges (" +
             std::to_string(from_de.size()) + ")");
  return rep;
}

struct RestrictedComponent {
  std::vector<int> vertices;
  Partition shape;
};

struct Restriction {
  Interval window;
  std::vector<LabeledEdge> edges;  // original vertex ids, shifted intervals
  std::vector<RestrictedComponent> components;
};

inline Tableau shift_letters(const Tableau& t, int delta) {
  Tableau out = t;
  for (auto& r : out.rows)
    for (auto& x : r) x += delta;
  return out;
}

// Rectified restriction to the window, renumbered from 1.
inline Tableau window_image(const Tableau& t, const Interval& w) {
  return shift_letters(jdt_rectify(restrict(t, w)), 1 - w.lo);
}

inline Restriction restrict_skeleton(const SkeletonGraph& g, const Interval& w) {
  if (w.lo < 1 || w.hi > g.n || w.lo > w.hi) throw std::invalid_argument("window out of range");
  Restriction r;
  r.window = w;
  for (const auto& e : g.edges)
    if (w.contains(e.interval))
      r.edges.push_back({e.src, e.dst, {e.interval.lo - w.lo + 1, e.interval.hi - w.lo + 1}});
  for (auto& comp : weak_components(static_cast<int>(g.vertices.size()), r.edges))
    r.components.push_back({comp, window_image(g.vertices[comp.front()], w).shape()});
  return r;
}

// Each component of the restriction is CS(mu) for its shape, via
// T -> rectified restriction.
inline CheckReport restriction_check(const SkeletonGraph& g, const Restriction& r) {
  CheckReport rep;
  std::map<Partition, SkeletonGraph> cache;
  std::vector<int> comp_of(g.vertices.size(), -1);
  for (std::size_t c = 0; c < r.components.size(); ++c)
    for (int v : r.components[c].vertices) comp_of[v] = static_cast<int>(c);
  std::vector<std::set<std::tuple<Tableau, Interval, Tableau>>> edge_sets(r.components.size());
  for (const auto& e : r.edges)
    edge_sets[comp_of[e.src]].insert({window_image(g.vertices[e.src], r.window), e.interval,
                                      window_image(g.vertices[e.dst], r.window)});
  for (std::size_t c = 0; c < r.components.size(); ++c) {
    const auto& comp = r.components[c];
    auto it = cache.find(comp.shape);
    if (it == cache.end()) it = cache.emplace(comp.shape, build_skeleton_direct(comp.shape)).first;
    const SkeletonGraph& target = it->second;
    std::set<Tableau> images;
    for (int v : comp.vertices) images.insert(window_image(g.vertices[v], r.window));
    std::string where = "component " + std::to_string(c) + " (" + to_string(comp.shape) + ")";
    if (images.size() != comp.vertices.size() ||
        images != std::set<Tableau>(target.vertices.begin(), target.vertices.end()))
      rep.fail(where + ": vertex images are not SYT of its shape");
    std::set<std::tuple<Tableau, Interval, Tableau>> want;
    for (const auto& e : target.edges)
      want.insert({target.vertices[e.src], e.interval, target.vertices[e.dst]});
    if (edge_sets[c] != want) rep.fail(where + ": edges differ from the skeleton of its shape");
  }
  return rep;
}

// Branching: the restriction to [1, n-1] splits into one copy of CS(mu) for
// every mu obtained by removing a corner.
inline CheckReport branching_check(const SkeletonGraph& g) {
  CheckReport rep;
  if (g.n <= 1) return rep;
  auto r = restrict_skeleton(g, {1, g.n - 1});
  rep.merge(restriction_check(g, r));
  std::multiset<Partition> got, want;
  for (auto& c : r.components) got.insert(c.shape);
  for (auto& [mu, row] : remove_corner(g.shape)) want.insert(mu);
  if (got != want) rep.fail("branching components do not match the removable corners");
  return rep;
}

inline CheckReport lusztig_invariance_check(const SkeletonGraph& g) {
  CheckReport rep;
  std::vector<int> ev;
  for (const auto& t : g.vertices) {
    int id = g.id_of(evacuate(t));
    if (id < 0) {
      rep.fail("evacuation left SYT(lambda)");
      return rep;
    }
    ev.push_back(id);
  }
  using Key = std::tuple<int, Interval, int, EdgeType>;
  std::multiset<Key> have, image;
  for (const auto& e : g.edges) {
    have.insert({e.src, e.interval, e.dst, e.type});
    image.insert({ev[e.dst], mirror(e.interval, g.n), ev[e.src], opposite(e.type)});
  }
  if (have != image) rep.fail("edge set is not invariant under the Lusztig involution");
  for (std::size_t v = 0; v < ev.size(); ++v)
    if (g.descents[ev[v]] != g.descents[v].reversed()) rep.fail("evacuation does not reverse Des");
  return rep;
}

// A4-type consequences on the abstract labelled graph.
inline CheckReport window_checks(const SkeletonGraph& g) {
  CheckReport rep;
  if (g.n < 2) return rep;
  LabeledGraph lg = g.labeled();
  LabeledGraph head = window_head(lg), tail = window_tail(lg);
  if (!isomorphic(head, tail)) rep.fail("G_[1,n-1] and G_[2,n] are not isomorphic");
  if (!isomorphic(lusztig_image(head), head)) rep.fail("G_[1,n-1] is not Lusztig invariant");
  if (!isomorphic(lusztig_image(lg), lg)) rep.fail("G is not Lusztig invariant as a labelled graph");
  return rep;
}

inline std::vector<std::vector<int>> scc(const SkeletonGraph& g) {
  std::vector<std::vector<int>> adj(g.vertices.size());
  for (const auto& e : g.edges) adj[e.src].push_back(e.dst);
  return strong_components(static_cast<int>(g.vertices.size()), adj);
}

inline bool is_strongly_connected(const SkeletonGraph& g) { return scc(g).size() <= 1; }

// Replace the letters of block j of Des(T) by j.
inline Tableau block_tableau(const Tableau& t, const Composition& alpha) {
  auto bl = alpha.blocks();
  Tableau out = t;
  for (auto& r : out.rows)
    for (auto& x : r)
      for (std::size_t j = 0; j < bl.size(); ++j)
        if (bl[j].contains(x)) {
          x = static_cast<int>(j) + 1;
          break;
        }
  return out;
}

struct TopSubcrystal {
  std::vector<int> vertices;          // skeleton ids with l(Des) = l(lambda)
  std::vector<int> crystal_ids;       // matching vertex of B(lambda)_l
  std::vector<CrystalEdge> edges;     // induced edges, in crystal ids
};

inline CheckReport top_subcrystal_check(const SkeletonGraph& g, TopSubcrystal* out = nullptr) {
  CheckReport rep;
  int l = g.shape.length();
  CrystalGraph b = build_crystal(g.shape, std::max(l, 1));
  TopSubcrystal top;
  std::vector<int> pos(g.vertices.size(), -1);
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    if (g.descents[v].length() == l) {
      int id = b.id_of(block_tableau(g.vertices[v], g.descents[v]));
      if (id < 0) rep.fail("top vertex does not map into the crystal");
      pos[v] = static_cast<int>(top.vertices.size());
      top.vertices.push_back(static_cast<int>(v));
      top.crystal_ids.push_back(id);
    }
  if (std::set<int>(top.crystal_ids.begin(), top.crystal_ids.end()).size() != b.vertices.size() ||
      top.crystal_ids.size() != b.vertices.size())
    rep.fail("top vertices are not in bijection with the crystal");
  for (const auto& e : g.edges) {
    if (pos[e.src] < 0 || pos[e.dst] < 0) continue;
    auto bl = g.descents[e.src].blocks();
    int j = -1;
    for (std::size_t q = 0; q + 1 < bl.size(); ++q)
      if (bl[q].lo <= e.interval.lo && e.interval.hi <= bl[q + 1].hi) j = static_cast<int>(q);
    if (j < 0) {
      rep.fail("top edge " + to_string(e.interval) + " does not fit two adjacent blocks");
      continue;
    }
    int bs = top.crystal_ids[pos[e.src]], bd = top.crystal_ids[pos[e.dst]];
    top.edges.push_back({bs, j + 1, bd});
    const Tableau& bt = b.vertices[bs];
    int want_phi = e.interval.lo - bl[j].lo + 1;
    int want_eps = bl[j + 1].hi - e.interval.hi;
    if (phi(bt, j + 1) != want_phi || eps(bt, j + 1) != want_eps)
      rep.fail("string lengths disagree on edge " + to_string(e.interval));
  }
  auto a = top.edges, c = b.edges;
  std::sort(a.begin(), a.end());
  std::sort(c.begin(), c.end());
  if (a != c) rep.fail("induced top edges differ from the crystal edges");
  if (out) *out = top;
  return rep;
}

inline CheckReport fan_check(const SkeletonGraph& g) { return fan_check(g.labeled(), g.types()); }

inline CheckReport in_out_check(const SkeletonGraph& g) {
  return in_out_check(g.labeled(), g.types(), Composition(g.shape.parts));
}

}  // namespace cskit

#endif  // CSKIT_SKELETON_HPP

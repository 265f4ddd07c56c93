#ifndef CSKIT_LABELED_GRAPH_HPP
#define CSKIT_LABELED_GRAPH_HPP

// Abstract directed graphs whose vertices carry compositions and whose edges
// carry intervals, with label-preserving isomorphism testing.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "tableau.hpp"

namespace cskit {

enum class EdgeType { Preserving, Increasing, Decreasing };

inline std::string to_string(EdgeType t) {
  switch (t) {
    case EdgeType::Preserving: return "PRESERVING";
    case EdgeType::Increasing: return "INCREASING";
    case EdgeType::Decreasing: return "DECREASING";
  }
  return "?";
}

inline EdgeType edge_type_from_string(const std::string& s) {
  if (s == "PRESERVING" || s == "P") return EdgeType::Preserving;
  if (s == "INCREASING" || s == "I") return EdgeType::Increasing;
  if (s == "DECREASING" || s == "D") return EdgeType::Decreasing;
  throw std::invalid_argument("unknown edge type: " + s);
}

inline EdgeType opposite(EdgeType t) {
  if (t == EdgeType::Increasing) return EdgeType::Decreasing;
  if (t == EdgeType::Decreasing) return EdgeType::Increasing;
  return t;
}

// Type from the change in the number of parts of the endpoint labels.
inline std::optional<EdgeType> type_from_lengths(const Composition& a, const Composition& b) {
  int d = b.length() - a.length();
  if (d == 0) return EdgeType::Preserving;
  if (d == 1) return EdgeType::Increasing;
  if (d == -1) return EdgeType::Decreasing;
  return std::nullopt;
}

inline Interval mirror(const Interval& I, int n) { return {n + 1 - I.hi, n + 1 - I.lo}; }

struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string msg) {
    ok = false;
    if (failures.size() < 20) failures.push_back(std::move(msg));
  }
  void merge(const CheckReport& o, const std::string& prefix = "") {
    if (!o.ok) ok = false;
    for (const auto& m : o.failures)
      if (failures.size() < 20) failures.push_back(prefix + m);
  }
  std::string first() const { return failures.empty() ? "" : failures.front(); }
};

struct LabeledEdge {
  int src = 0;
  int dst = 0;
  Interval interval;
  auto operator<=>(const LabeledEdge&) const = default;
};

struct LabeledGraph {
  int n = 0;
  std::vector<Composition> labels;
  std::vector<LabeledEdge> edges;

  int size() const { return static_cast<int>(labels.size()); }

  std::vector<std::vector<int>> out_edges() const {
    std::vector<std::vector<int>> out(labels.size());
    for (std::size_t k = 0; k < edges.size(); ++k) out[edges[k].src].push_back(static_cast<int>(k));
    return out;
  }
  std::vector<std::vector<int>> in_edges() const {
    std::vector<std::vector<int>> in(labels.size());
    for (std::size_t k = 0; k < edges.size(); ++k) in[edges[k].dst].push_back(static_cast<int>(k));
    return in;
  }
};

// Induced subgraph on the given vertices (in the given order).
inline LabeledGraph induced_subgraph(const LabeledGraph& g, const std::vector<int>& verts) {
  std::vector<int> pos(g.size(), -1);
  LabeledGraph h;
  h.n = g.n;
  for (std::size_t k = 0; k < verts.size(); ++k) {
    pos[verts[k]] = static_cast<int>(k);
    h.labels.push_back(g.labels[verts[k]]);
  }
  for (const auto& e : g.edges)
    if (pos[e.src] >= 0 && pos[e.dst] >= 0) h.edges.push_back({pos[e.src], pos[e.dst], e.interval});
  return h;
}

inline std::vector<std::vector<int>> weak_components(int nv, const std::vector<LabeledEdge>& edges) {
  std::vector<int> parent(nv);
  for (int v = 0; v < nv; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : edges) parent[find(e.src)] = find(e.dst);
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < nv; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, vs] : groups) out.push_back(vs);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<int>> weak_components(const LabeledGraph& g) {
  return weak_components(g.size(), g.edges);
}

// Strongly connected components (iterative Tarjan), each sorted, listed by
// smallest member.
inline std::vector<std::vector<int>> strong_components(int nv,
                                                       const std::vector<std::vector<int>>& adj) {
  std::vector<int> index(nv, -1), low(nv, 0), stack;
  std::vector<bool> on_stack(nv, false);
  std::vector<std::vector<int>> comps;
  int counter = 0;
  for (int root = 0; root < nv; ++root) {
    if (index[root] >= 0) continue;
    std::vector<std::pair<int, std::size_t>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, k] = call.back();
      if (k < adj[v].size()) {
        int u = adj[v][k++];
        if (index[u] < 0) {
          index[u] = low[u] = counter++;
          stack.push_back(u);
          on_stack[u] = true;
          call.push_back({u, 0});
        } else if (on_stack[u]) {
          low[v] = std::min(low[v], index[u]);
        }
      } else {
        int done = v;
        call.pop_back();
        if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
        if (low[done] == index[done]) {
          std::vector<int> comp;
          int u;
          do {
            u = stack.back();
            stack.pop_back();
            on_stack[u] = false;
            comp.push_back(u);
          } while (u != done);
          std::sort(comp.begin(), comp.end());
          comps.push_back(comp);
        }
      }
    }
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

inline std::vector<std::vector<int>> strong_components(const LabeledGraph& g) {
  std::vector<std::vector<int>> adj(g.size());
  for (const auto& e : g.edges) adj[e.src].push_back(e.dst);
  return strong_components(g.size(), adj);
}

namespace detail {

// Iterated colour refinement; the initial colour is the vertex label.
inline std::vector<int> refine_colors(const LabeledGraph& g,
                                      std::map<std::vector<int>, int>& palette,
                                      const std::vector<int>& initial, int rounds) {
  std::vector<int> col = initial;
  auto outs = g.out_edges(), ins = g.in_edges();
  for (int r = 0; r < rounds; ++r) {
    std::vector<int> next(g.size());
    for (int v = 0; v < g.size(); ++v) {
      std::vector<std::tuple<int, int, int, int>> sig;  // (dir, lo, hi, colour)
      for (int k : outs[v]) sig.emplace_back(0, g.edges[k].interval.lo, g.edges[k].interval.hi, col[g.edges[k].dst]);
      for (int k : ins[v]) sig.emplace_back(1, g.edges[k].interval.lo, g.edges[k].interval.hi, col[g.edges[k].src]);
      std::sort(sig.begin(), sig.end());
      std::vector<int> key{col[v]};
      for (auto& [d, lo, hi, c] : sig) key.insert(key.end(), {d, lo, hi, c});
      auto it = palette.try_emplace(key, static_cast<int>(palette.size())).first;
      next[v] = it->second;
    }
    col = next;
  }
  return col;
}

}  // namespace detail

// Returns phi with phi[v] in h for v in g, preserving vertex labels and the
// multiset of (phi(src), phi(dst), interval) edges.
inline std::optional<std::vector<int>> find_isomorphism(const LabeledGraph& g, const LabeledGraph& h) {
  int nv = g.size();
  if (nv != h.size() || g.edges.size() != h.edges.size()) return std::nullopt;
  {
    auto a = g.labels, b = h.labels;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  // shared palette so colours are comparable across the two graphs
  std::map<std::vector<int>, int> palette;
  std::map<Composition, int> label_ids;
  for (const auto& l : g.labels) label_ids.try_emplace(l, static_cast<int>(label_ids.size()));
  std::vector<int> cg(nv), ch(nv);
  for (int v = 0; v < nv; ++v) {
    cg[v] = label_ids.at(g.labels[v]);
    ch[v] = label_ids.at(h.labels[v]);
  }
  // interleave refinement so that both graphs see the same palette evolution
  for (int r = 0; r < nv; ++r) {
    std::vector<int> ng = detail::refine_colors(g, palette, cg, 1);
    std::vector<int> nh = detail::refine_colors(h, palette, ch, 1);
    std::vector<int> sg = ng, sh = nh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return std::nullopt;
    bool stable = std::set<int>(ng.begin(), ng.end()).size() == std::set<int>(cg.begin(), cg.end()).size();
    cg = ng;
    ch = nh;
    if (stable) break;
  }

  // adjacency multisets between ordered pairs
  using PairKey = std::pair<int, int>;
  std::map<PairKey, std::vector<Interval>> eg, eh;
  for (const auto& e : g.edges) eg[{e.src, e.dst}].push_back(e.interval);
  for (const auto& e : h.edges) eh[{e.src, e.dst}].push_back(e.interval);
  for (auto& [k, v] : eg) std::sort(v.begin(), v.end());
  for (auto& [k, v] : eh) std::sort(v.begin(), v.end());
  auto between = [](const std::map<PairKey, std::vector<Interval>>& m, int a, int b) {
    static const std::vector<Interval> none;
    auto it = m.find({a, b});
    return it == m.end() ? none : it->second;
  };

  // assign vertices of g in order of increasing colour-class size
  std::map<int, int> class_size;
  for (int c : cg) ++class_size[c];
  std::vector<int> order(nv);
  for (int v = 0; v < nv; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return class_size[cg[a]] < class_size[cg[b]];
  });

  std::vector<int> phi(nv, -1);
  std::vector<bool> used(nv, false);
  std::vector<int> assigned;
  long long budget = 5'000'000;
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == order.size()) return true;
    if (--budget < 0) throw std::runtime_error("isomorphism search budget exhausted");
    int v = order[k];
    for (int w = 0; w < nv; ++w) {
      if (used[w] || ch[w] != cg[v]) continue;
      bool ok = between(eg, v, v) == between(eh, w, w);
      for (std::size_t a = 0; ok && a < assigned.size(); ++a) {
        int u = assigned[a];
        ok = between(eg, u, v) == between(eh, phi[u], w) && between(eg, v, u) == between(eh, w, phi[u]);
      }
      if (!ok) continue;
      phi[v] = w;
      used[w] = true;
      assigned.push_back(v);
      if (rec(k + 1)) return true;
      assigned.pop_back();
      used[w] = false;
      phi[v] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return phi;
}

inline bool isomorphic(const LabeledGraph& g, const LabeledGraph& h) {
  return find_isomorphism(g, h).has_value();
}

// Edge lookup by (vertex, interval).
struct EdgeIndex {
  std::map<std::pair<int, Interval>, std::vector<int>> out;
  std::map<std::pair<int, Interval>, std::vector<int>> in;

  explicit EdgeIndex(const std::vector<LabeledEdge>& edges) {
    for (std::size_t k = 0; k < edges.size(); ++k) {
      out[{edges[k].src, edges[k].interval}].push_back(static_cast<int>(k));
      in[{edges[k].dst, edges[k].interval}].push_back(static_cast<int>(k));
    }
  }
  // The unique edge out of v labelled I, or -1 (also -1 when not unique).
  int out_edge(int v, const Interval& I) const {
    auto it = out.find({v, I});
    return it == out.end() || it->second.size() != 1 ? -1 : it->second.front();
  }
  std::vector<int> in_edges(int v, const Interval& I) const {
    auto it = in.find({v, I});
    return it == in.end() ? std::vector<int>{} : it->second;
  }
  bool has_edge(int a, const Interval& I, int b, const std::vector<LabeledEdge>& edges) const {
    auto it = out.find({a, I});
    if (it == out.end()) return false;
    for (int k : it->second)
      if (edges[k].dst == b) return true;
    return false;
  }
};

// L_n(G): reverse every label and every edge, mirroring the intervals.
inline LabeledGraph lusztig_image(const LabeledGraph& g) {
  LabeledGraph h;
  h.n = g.n;
  for (const auto& a : g.labels) h.labels.push_back(a.reversed());
  for (const auto& e : g.edges) h.edges.push_back({e.dst, e.src, mirror(e.interval, g.n)});
  return h;
}

inline Composition drop_last_letter(const Composition& a) {
  auto p = a.parts;
  if (p.empty()) throw std::invalid_argument("empty composition");
  if (--p.back() == 0) p.pop_back();
  return Composition(p);
}

inline Composition drop_first_letter(const Composition& a) {
  auto p = a.parts;
  if (p.empty()) throw std::invalid_argument("empty composition");
  if (--p.front() == 0) p.erase(p.begin());
  return Composition(p);
}

// G_[1,n-1]: forget the letter n.
inline LabeledGraph window_head(const LabeledGraph& g) {
  LabeledGraph h;
  h.n = g.n - 1;
  for (const auto& a : g.labels) h.labels.push_back(drop_last_letter(a));
  for (const auto& e : g.edges)
    if (e.interval.hi <= g.n - 1) h.edges.push_back(e);
  return h;
}

// G_[2,n]: forget the letter 1 and shift down by one.
inline LabeledGraph window_tail(const LabeledGraph& g) {
  LabeledGraph h;
  h.n = g.n - 1;
  for (const auto& a : g.labels) h.labels.push_back(drop_first_letter(a));
  for (const auto& e : g.edges)
    if (e.interval.lo >= 2) h.edges.push_back({e.src, e.dst, {e.interval.lo - 1, e.interval.hi - 1}});
  return h;
}

// Fan structure around every length-increasing edge (out-fan) and every
// length-decreasing edge (in-fan); types are supplied per edge.
inline CheckReport fan_check(const LabeledGraph& g, const std::vector<EdgeType>& types) {
  CheckReport rep;
  EdgeIndex idx(g.edges);
  auto has_typed = [&](int a, Interval I, int b, EdgeType t) {
    auto it = idx.out.find({a, I});
    if (it == idx.out.end()) return false;
    for (int k : it->second)
      if (g.edges[k].dst == b && types[k] == t) return true;
    return false;
  };
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const auto& ed = g.edges[k];
    int h = (ed.interval.size() - 1) / 2;
    int c = ed.interval.lo + h;
    std::string where = "edge " + std::to_string(ed.src) + "->" + std::to_string(ed.dst) + " " +
                        to_string(ed.interval);
    if (types[k] == EdgeType::Increasing) {
      std::vector<int> S(h + 1, -1);
      for (int q = 1; q <= h; ++q) {
        int e2 = idx.out_edge(ed.src, {c - q, c + q});
        if (e2 < 0 || types[e2] != EdgeType::Increasing) {
          rep.fail("out-fan of " + where + ": missing increasing " + to_string(Interval{c - q, c + q}));
          break;
        }
        S[q] = g.edges[e2].dst;
      }
      if (S[h] < 0 || (h >= 1 && S[1] < 0)) continue;
      for (int q = h; q >= 2; --q)
        if (!has_typed(S[q], {c + q - 1, c + q + 1}, S[q - 1], EdgeType::Preserving))
          rep.fail("out-fan of " + where + ": missing preserving " +
                   to_string(Interval{c + q - 1, c + q + 1}));
      if (!has_typed(S[1], {c, c + 2}, ed.src, EdgeType::Decreasing))
        rep.fail("out-fan of " + where + ": missing closing decreasing " + to_string(Interval{c, c + 2}));
    } else if (types[k] == EdgeType::Decreasing) {
      std::vector<int> T(h + 1, -1);
      for (int q = 1; q <= h; ++q) {
        int src = -1;
        for (int e2 : idx.in_edges(ed.dst, {c - q, c + q}))
          if (types[e2] == EdgeType::Decreasing) src = g.edges[e2].src;
        if (src < 0) {
          rep.fail("in-fan of " + where + ": missing decreasing " + to_string(Interval{c - q, c + q}));
          break;
        }
        T[q] = src;
      }
      if (T[h] < 0 || (h >= 1 && T[1] < 0)) continue;
      for (int q = 2; q <= h; ++q)
        if (!has_typed(T[q - 1], {c - q - 1, c - q + 1}, T[q], EdgeType::Preserving))
          rep.fail("in-fan of " + where + ": missing preserving " +
                   to_string(Interval{c - q - 1, c - q + 1}));
      if (!has_typed(ed.dst, {c - 2, c}, T[1], EdgeType::Increasing))
        rep.fail("in-fan of " + where + ": missing closing increasing " + to_string(Interval{c - 2, c}));
    }
  }
  return rep;
}

// Every vertex whose label is not lambda has an incoming preserving or
// increasing edge; every vertex whose reversed label is not lambda has an
// outgoing preserving or decreasing edge.
inline CheckReport in_out_check(const LabeledGraph& g, const std::vector<EdgeType>& types,
                                const Composition& lambda) {
  CheckReport rep;
  std::vector<bool> good_in(g.size(), false), good_out(g.size(), false);
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    if (types[k] != EdgeType::Decreasing) good_in[g.edges[k].dst] = true;
    if (types[k] != EdgeType::Increasing) good_out[g.edges[k].src] = true;
  }
  for (int v = 0; v < g.size(); ++v) {
    if (g.labels[v] != lambda && !good_in[v])
      rep.fail("vertex " + std::to_string(v) + " " + to_string(g.labels[v]) +
               " lacks an incoming preserving/increasing edge");
    if (g.labels[v].reversed() != lambda && !good_out[v])
      rep.fail("vertex " + std::to_string(v) + " " + to_string(g.labels[v]) +
               " lacks an outgoing preserving/decreasing edge");
  }
  return rep;
}

}  // namespace cskit

#endif  // CSKIT_LABELED_GRAPH_HPP

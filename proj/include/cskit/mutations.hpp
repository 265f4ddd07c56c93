#ifndef CSKIT_MUTATIONS_HPP
#define CSKIT_MUTATIONS_HPP

// A fixed suite of small corruptions of a labelled graph, used to check that
// the axiom verifiers are sensitive: edge deletion, interval shifts, label
// swaps and direction flips.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "axioms.hpp"

namespace cskit {

struct Mutant {
  std::string name;
  LabeledGraph graph;
};

namespace detail {

inline int first_edge_of_type(const LabeledGraph& g, EdgeType t) {
  auto types = infer_types(g);
  for (std::size_t k = 0; k < g.edges.size(); ++k)
    if (types[k] == t) return static_cast<int>(k);
  return -1;
}

inline int first_edge_where(const LabeledGraph& g, const std::function<bool(const LabeledEdge&)>& pred) {
  for (std::size_t k = 0; k < g.edges.size(); ++k)
    if (pred(g.edges[k])) return static_cast<int>(k);
  return -1;
}

}  // namespace detail

// The twelve mutants of g; a mutation that cannot be applied (for lack of a
// suitable edge or vertex) throws.
inline std::vector<Mutant> mutation_suite(const LabeledGraph& g) {
  std::vector<Mutant> out;
  auto need = [](int k, const std::string& what) {
    if (k < 0) throw std::invalid_argument("mutation not applicable: " + what);
    return k;
  };
  const EdgeType kinds[] = {EdgeType::Preserving, EdgeType::Increasing, EdgeType::Decreasing};
  const char* names[] = {"preserving", "increasing", "decreasing"};

  for (int t = 0; t < 3; ++t) {
    int k = need(detail::first_edge_of_type(g, kinds[t]), names[t]);
    Mutant m{std::string("delete first ") + names[t] + " edge", g};
    m.graph.edges.erase(m.graph.edges.begin() + k);
    out.push_back(m);
  }
  {
    int k = need(detail::first_edge_where(g, [&](const LabeledEdge& e) { return e.interval.lo > 1 && e.interval.hi < g.n; }),
                 "widen");
    Mutant m{"widen an interval by two", g};
    m.graph.edges[k].interval = {g.edges[k].interval.lo - 1, g.edges[k].interval.hi + 1};
    out.push_back(m);
  }
  {
    int k = need(detail::first_edge_where(g, [&](const LabeledEdge& e) { return e.interval.hi < g.n; }), "shift up");
    Mutant m{"shift an interval up by one", g};
    m.graph.edges[k].interval = {g.edges[k].interval.lo + 1, g.edges[k].interval.hi + 1};
    out.push_back(m);
  }
  {
    int k = need(detail::first_edge_where(g, [](const LabeledEdge& e) { return e.interval.lo > 1; }), "shift down");
    Mutant m{"shift an interval down by one", g};
    m.graph.edges[k].interval = {g.edges[k].interval.lo - 1, g.edges[k].interval.hi - 1};
    out.push_back(m);
  }
  {
    int k = need(detail::first_edge_where(g, [&](const LabeledEdge& e) { return g.labels[e.src] != g.labels[e.dst]; }),
                 "swap endpoint labels");
    Mutant m{"swap the labels of an edge's endpoints", g};
    std::swap(m.graph.labels[g.edges[k].src], m.graph.labels[g.edges[k].dst]);
    out.push_back(m);
  }
  {
    int v = -1;
    for (int u = 0; u < g.size() && v < 0; ++u)
      if (g.labels[u] != g.labels[u].reversed()) v = u;
    need(v, "reverse label");
    Mutant m{"reverse one vertex label", g};
    m.graph.labels[v] = g.labels[v].reversed();
    out.push_back(m);
  }
  {
    auto top = top_label(g);
    int v = -1;
    for (int u = 0; top && u < g.size() && v < 0; ++u)
      if (g.labels[u] != *top) v = u;
    need(v, "duplicate top label");
    Mutant m{"give a second vertex the top label", g};
    m.graph.labels[v] = *top;
    out.push_back(m);
  }
  for (int t = 0; t < 3; ++t) {
    int k = need(detail::first_edge_of_type(g, kinds[t]), names[t]);
    Mutant m{std::string("flip first ") + names[t] + " edge", g};
    std::swap(m.graph.edges[k].src, m.graph.edges[k].dst);
    out.push_back(m);
  }
  return out;
}

}  // namespace cskit

#endif  // CSKIT_MUTATIONS_HPP

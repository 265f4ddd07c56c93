#ifndef CSKIT_CRYSTAL_HPP
#define CSKIT_CRYSTAL_HPP

// Type-A crystal operators on words and semistandard tableaux, and the
// crystal graph B(lambda)_n.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "labeled_graph.hpp"
#include "tableau.hpp"

namespace cskit {

struct BracketState {
  Word word;
  int i = 0;
  std::vector<std::pair<int, int>> pairs;  // (position of i+1, position of i)
  std::vector<int> free_i;                 // unbracketed i, left to right
  std::vector<int> free_i1;                // unbracketed i+1, left to right
  int p = -1;                              // position f_i acts on, -1 if none
  int n_left = 0;
  int n_right = 0;
};

// Each i+1 is matched with the nearest unmatched i to its right.
inline BracketState bracket(const Word& w, int i) {
  BracketState s;
  s.word = w;
  s.i = i;
  std::vector<int> open;  // unmatched i+1 positions
  for (int pos = 0; pos < static_cast<int>(w.size()); ++pos) {
    if (w[pos] == i + 1) {
      open.push_back(pos);
    } else if (w[pos] == i) {
      if (!open.empty()) {
        s.pairs.emplace_back(open.back(), pos);
        open.pop_back();
      } else {
        s.free_i.push_back(pos);
      }
    }
  }
  s.free_i1 = open;
  if (!s.free_i.empty()) {
    s.p = s.free_i.back();
    for (auto [a, b] : s.pairs) {
      if (b < s.p) ++s.n_left;
      else if (a > s.p) ++s.n_right;
    }
  }
  return s;
}

inline std::optional<Word> f(const Word& w, int i) {
  auto s = bracket(w, i);
  if (s.p < 0) return std::nullopt;
  Word out = w;
  out[s.p] = i + 1;
  return out;
}

inline std::optional<Word> e(const Word& w, int i) {
  auto s = bracket(w, i);
  if (s.free_i1.empty()) return std::nullopt;
  Word out = w;
  out[s.free_i1.front()] = i;
  return out;
}

inline int phi(const Word& w, int i) {
  return static_cast<int>(bracket(w, i).free_i.size());
}

inline int eps(const Word& w, int i) {
  return static_cast<int>(bracket(w, i).free_i1.size());
}

inline std::optional<Tableau> f(const Tableau& t, int i) {
  auto w = f(reading_word(t), i);
  if (!w) return std::nullopt;
  Tableau out = from_reading_word(*w, t);
  if (!is_semistandard(out)) throw std::logic_error("f_i produced a non-semistandard tableau");
  return out;
}

inline std::optional<Tableau> e(const Tableau& t, int i) {
  auto w = e(reading_word(t), i);
  if (!w) return std::nullopt;
  Tableau out = from_reading_word(*w, t);
  if (!is_semistandard(out)) throw std::logic_error("e_i produced a non-semistandard tableau");
  return out;
}

inline int phi(const Tableau& t, int i) { return phi(reading_word(t), i); }
inline int eps(const Tableau& t, int i) { return eps(reading_word(t), i); }

// A decreasing cycle (a_1, a_2, ..., a_k) sending a_1 -> a_2 -> ... -> a_1.
struct Cycle {
  std::vector<int> values;

  bool is_identity() const { return values.size() <= 1; }
  int apply(int x) const {
    for (std::size_t k = 0; k < values.size(); ++k)
      if (values[k] == x) return values[(k + 1) % values.size()];
    return x;
  }
  Word apply(const Word& w) const {
    Word out;
    for (int x : w) out.push_back(apply(x));
    return out;
  }
  Tableau apply(const Tableau& t) const {
    Tableau out = t;
    for (auto& r : out.rows)
      for (auto& x : r) x = apply(x);
    return out;
  }
  auto operator<=>(const Cycle&) const = default;
};

inline Cycle decreasing_cycle(int top, int bottom) {
  Cycle c;
  for (int v = top; v >= bottom; --v) c.values.push_back(v);
  return c;
}

inline std::string to_string(const Cycle& c) {
  std::string s = "(";
  for (std::size_t k = 0; k < c.values.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(c.values[k]);
  }
  return s + ")";
}

inline Cycle cycle_of(const Word& w, int i) {
  auto s = bracket(w, i);
  if (s.p < 0) throw std::invalid_argument("cycle_of: f_i is not defined");
  int pp = standardize(w)[s.p];
  return decreasing_cycle(pp + s.n_left + s.n_right, pp);
}

inline Cycle cycle_of(const Tableau& t, int i) { return cycle_of(reading_word(t), i); }

inline bool quasi_edge(const Word& w, int i) {
  auto s = bracket(w, i);
  if (s.p < 0) throw std::invalid_argument("quasi_edge: f_i is not defined");
  return s.n_left + s.n_right == 0;
}

inline bool quasi_edge(const Tableau& t, int i) { return quasi_edge(reading_word(t), i); }

// Independent characterization through standardization.
inline bool quasi_edge_by_std(const Word& w, int i) {
  auto fw = f(w, i);
  if (!fw) throw std::invalid_argument("quasi_edge: f_i is not defined");
  return standardize(w) == standardize(*fw);
}

struct CrystalEdge {
  int src = 0;
  int i = 0;
  int dst = 0;
  auto operator<=>(const CrystalEdge&) const = default;
};

struct CrystalGraph {
  Partition shape;
  int n = 0;
  std::vector<Tableau> vertices;
  std::vector<std::vector<int>> weights;
  std::vector<CrystalEdge> edges;
  std::map<Word, int> index;  // reading word -> vertex id
  int highest = -1;
  int lowest = -1;

  int id_of(const Tableau& t) const {
    auto it = index.find(reading_word(t));
    return it == index.end() ? -1 : it->second;
  }
  // f-successor table: succ[v][i-1] = target or -1
  std::vector<std::vector<int>> successors() const {
    std::vector<std::vector<int>> s(vertices.size(), std::vector<int>(std::max(n - 1, 0), -1));
    for (const auto& ed : edges) s[ed.src][ed.i - 1] = ed.dst;
    return s;
  }
};

inline Tableau yamanouchi(const Partition& lam) {
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < lam.length(); ++r) rows.emplace_back(lam[r], r + 1);
  return Tableau(rows);
}

inline CrystalGraph build_crystal(const Partition& lam, int n) {
  if (n < lam.length()) throw std::invalid_argument("alphabet smaller than the number of rows");
  CrystalGraph g;
  g.shape = lam;
  g.n = n;
  g.vertices = enumerate_ssyt(lam, n);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    g.index[reading_word(g.vertices[v])] = static_cast<int>(v);
    auto wt = weight(g.vertices[v]);
    wt.resize(n, 0);
    g.weights.push_back(wt);
  }
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    Word w = reading_word(g.vertices[v]);
    bool has_e = false, has_f = false;
    for (int i = 1; i < n; ++i) {
      if (auto fw = f(w, i)) {
        has_f = true;
        g.edges.push_back({static_cast<int>(v), i, g.index.at(*fw)});
      }
      if (eps(w, i) > 0) has_e = true;
    }
    if (!has_e) {
      if (g.highest >= 0) throw std::logic_error("crystal has two highest weight vertices");
      g.highest = static_cast<int>(v);
    }
    if (!has_f) {
      if (g.lowest >= 0) throw std::logic_error("crystal has two lowest weight vertices");
      g.lowest = static_cast<int>(v);
    }
  }
  return g;
}

// Structural checks on an explicit graph (successor tables), so that mutated
// graphs can be fed in.
inline CheckReport stembridge_check(const CrystalGraph& g) {
  CheckReport rep;
  auto succ = g.successors();
  int nv = static_cast<int>(g.vertices.size());
  std::vector<std::vector<int>> pred(nv, std::vector<int>(std::max(g.n - 1, 0), -1));
  for (int v = 0; v < nv; ++v)
    for (int i = 1; i < g.n; ++i)
      if (succ[v][i - 1] >= 0) {
        if (pred[succ[v][i - 1]][i - 1] >= 0)
          rep.fail("vertex " + std::to_string(succ[v][i - 1]) + " has two incoming f_" +
                   std::to_string(i) + " edges");
        pred[succ[v][i - 1]][i - 1] = v;
      }
  auto go = [&](int v, int i) { return v < 0 ? -1 : succ[v][i - 1]; };
  auto string_len = [&](int v, int i) {
    int k = 0;
    for (int u = go(v, i); u >= 0 && k <= nv; u = go(u, i)) ++k;
    return k;
  };
  for (int v = 0; v < nv; ++v) {
    for (int i = 1; i < g.n; ++i)
      for (int j = i + 1; j < g.n; ++j) {
        int fi = go(v, i), fj = go(v, j);
        if (fi < 0 || fj < 0) continue;
        bool square_cond = string_len(fi, j) == string_len(v, j) ||
                           string_len(fj, i) == string_len(v, i);
        bool oct_cond = string_len(fi, j) == string_len(v, j) + 1 &&
                        string_len(fj, i) == string_len(v, i) + 1;
        std::string where = " at vertex " + std::to_string(v) + " for (" + std::to_string(i) +
                            "," + std::to_string(j) + ")";
        if (square_cond) {
          int a = go(fi, j), b = go(fj, i);
          if (a < 0 || a != b) rep.fail("square fails" + where);
        } else if (oct_cond && j == i + 1) {
          int a = go(go(go(go(v, i), j), j), i);
          int b = go(go(go(go(v, j), i), i), j);
          if (a < 0 || a != b) rep.fail("octagon fails" + where);
        } else {
          rep.fail("string lengths fit neither relation" + where);
        }
      }
  }
  return rep;
}

struct LusztigCrystalMap {
  std::vector<int> vertex_map;
  std::vector<CrystalEdge> edge_images;
};

inline LusztigCrystalMap lusztig_crystal(const CrystalGraph& g) {
  LusztigCrystalMap m;
  for (const auto& t : g.vertices) {
    int id = g.id_of(evacuate(t, g.n));
    if (id < 0) throw std::logic_error("evacuation left the crystal");
    m.vertex_map.push_back(id);
  }
  for (const auto& ed : g.edges)
    m.edge_images.push_back({m.vertex_map[ed.dst], g.n - ed.i, m.vertex_map[ed.src]});
  return m;
}

inline bool lusztig_crystal_check(const CrystalGraph& g) {
  auto m = lusztig_crystal(g);
  if (m.vertex_map[g.highest] != g.lowest) return false;
  for (std::size_t v = 0; v < m.vertex_map.size(); ++v)
    if (m.vertex_map[m.vertex_map[v]] != static_cast<int>(v)) return false;
  std::vector<CrystalEdge> a = g.edges, b = m.edge_images;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace cskit

#endif  // CSKIT_CRYSTAL_HPP

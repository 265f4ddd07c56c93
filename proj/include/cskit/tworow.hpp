#ifndef CSKIT_TWOROW_HPP
#define CSKIT_TWOROW_HPP

// Two-row shapes as lattice paths: a step -1 for each letter in the first row
// and +1 for each letter in the second, never rising above height 0. Edges of
// the skeleton become local strip moves, strongly-connected components are
// indexed by the decomposition into maximal rectangles, and evacuation is a
// reflection of the path.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skeleton.hpp"

namespace cskit {

struct LatticePath {
  std::vector<int> steps;  // p_1..p_n stored 0-indexed, each +1 or -1

  LatticePath() = default;
  explicit LatticePath(std::vector<int> s) : steps(std::move(s)) { validate(); }

  int size() const { return static_cast<int>(steps.size()); }
  // 1-indexed step p_i.
  int at(int i) const { return steps[i - 1]; }
  int downs() const { return static_cast<int>(std::count(steps.begin(), steps.end(), -1)); }
  int ups() const { return size() - downs(); }

  // h_0..h_n.
  std::vector<int> heights() const {
    std::vector<int> h(steps.size() + 1, 0);
    for (std::size_t k = 0; k < steps.size(); ++k) h[k + 1] = h[k] + steps[k];
    return h;
  }

  void validate() const {
    int h = 0;
    for (std::size_t k = 0; k < steps.size(); ++k) {
      if (steps[k] != 1 && steps[k] != -1)
        throw std::invalid_argument("path steps must be +1 or -1");
      h += steps[k];
      if (h > 0) throw std::invalid_argument("path rises above height 0 at step " + std::to_string(k + 1));
    }
  }

  auto operator<=>(const LatticePath&) const = default;
};

// Text form over {u, d}, e.g. "dduudd".
inline std::string to_string(const LatticePath& p) {
  std::string s;
  for (int x : p.steps) s += x > 0 ? 'u' : 'd';
  return s;
}

inline LatticePath path_from_string(const std::string& s) {
  std::vector<int> st;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == 'u') st.push_back(1);
    else if (s[k] == 'd') st.push_back(-1);
    else throw std::invalid_argument("path character " + std::to_string(k + 1) + " is not 'u' or 'd'");
  }
  return LatticePath(st);
}

inline LatticePath path_of(const Tableau& t) {
  if (t.num_rows() > 2) throw std::invalid_argument("path_of: shape has more than two rows");
  if (!is_standard(t)) throw std::invalid_argument("path_of: tableau is not standard");
  std::vector<int> st(t.num_cells(), -1);
  if (t.num_rows() == 2)
    for (int x : t.rows[1]) st[x - 1] = 1;
  return LatticePath(st);
}

inline Tableau tableau_of(const LatticePath& p) {
  std::vector<std::vector<int>> rows(2);
  for (int i = 1; i <= p.size(); ++i) rows[p.at(i) < 0 ? 0 : 1].push_back(i);
  return Tableau(rows);
}

// Up-step positions followed by down-step positions.
inline Word row_word(const LatticePath& p) {
  Word w;
  for (int i = 1; i <= p.size(); ++i)
    if (p.at(i) > 0) w.push_back(i);
  for (int i = 1; i <= p.size(); ++i)
    if (p.at(i) < 0) w.push_back(i);
  return w;
}

// All paths with l1 down-steps and l2 up-steps, in lexicographic order of
// the steps (d before u).
inline std::vector<LatticePath> enumerate_paths(int l1, int l2) {
  if (l1 < l2 || l2 < 0) throw std::invalid_argument("enumerate_paths: need l1 >= l2 >= 0");
  std::vector<LatticePath> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int d, int u, int h) -> void {
    if (d == 0 && u == 0) {
      out.push_back(LatticePath(cur));
      return;
    }
    if (d > 0) {
      cur.push_back(-1);
      self(self, d - 1, u, h - 1);
      cur.pop_back();
    }
    if (u > 0 && h < 0) {
      cur.push_back(1);
      self(self, d, u - 1, h + 1);
      cur.pop_back();
    }
  };
  rec(rec, l1, l2, 0);
  return out;
}

// --- strip moves -----------------------------------------------------------

enum class StripMove { A, B };

inline std::string to_string(StripMove m) { return m == StripMove::A ? "A" : "B"; }

struct PathEdge {
  Interval interval;
  StripMove move = StripMove::A;
  LatticePath target;
  Cycle cycle;
};

// The move of I = [i, i+2m] at p, if any: (A) d^{m+1} u^m becomes
// d^m u^m d (a right strip is added); (B) u d^m u^m becomes d^m u^{m+1}
// (a left strip is removed).
inline std::optional<StripMove> strip_move(const LatticePath& p, const Interval& I) {
  if (I.lo < 1 || I.hi > p.size() || I.size() < 3 || I.size() % 2 == 0) return std::nullopt;
  int i = I.lo, m = (I.size() - 1) / 2;
  auto run = [&](int from, int len, int v) {
    for (int k = from; k < from + len; ++k)
      if (p.at(k) != v) return false;
    return true;
  };
  if (run(i, m + 1, -1) && run(i + m + 1, m, 1)) return StripMove::A;
  if (run(i, 1, 1) && run(i + 1, m, -1) && run(i + m + 1, m, 1)) return StripMove::B;
  return std::nullopt;
}

inline PathEdge apply_strip_move(const LatticePath& p, const Interval& I, StripMove mv) {
  int i = I.lo, m = (I.size() - 1) / 2;
  std::vector<int> st = p.steps;
  for (int k = 0; k < m; ++k) st[i - 1 + k] = -1;
  for (int k = 0; k < m; ++k) st[i - 1 + m + k] = 1;
  if (mv == StripMove::A) {
    st[i + 2 * m - 1] = -1;
    return {I, mv, LatticePath(st), decreasing_cycle(i + 2 * m, i + m)};
  }
  st[i + 2 * m - 1] = 1;
  return {I, mv, LatticePath(st), decreasing_cycle(i + m, i)};
}

inline std::vector<PathEdge> local_edges(const LatticePath& p) {
  std::vector<PathEdge> out;
  for (int lo = 1; lo <= p.size(); ++lo)
    for (int hi = lo + 2; hi <= p.size(); hi += 2)
      if (auto mv = strip_move(p, {lo, hi})) out.push_back(apply_strip_move(p, {lo, hi}, *mv));
  return out;
}

// Edge type from the move and the neighbouring step: (A) increases length when
// the step after I goes up and preserves it otherwise, including when I ends
// the path; (B) decreases length when the step before I goes down.
inline EdgeType two_row_transition(const LatticePath& p, const Interval& I, StripMove mv) {
  if (mv == StripMove::A)
    return I.hi + 1 <= p.size() && p.at(I.hi + 1) > 0 ? EdgeType::Increasing : EdgeType::Preserving;
  return I.lo - 1 >= 1 && p.at(I.lo - 1) < 0 ? EdgeType::Decreasing : EdgeType::Preserving;
}

// The skeleton of (l1, l2) built from paths alone; vertices follow the
// ordering of enumerate_syt so the result is comparable with the generic
// builder.
inline SkeletonGraph build_skeleton_paths(int l1, int l2) {
  SkeletonGraph g;
  g.shape = l2 > 0 ? Partition({l1, l2}) : (l1 > 0 ? Partition({l1}) : Partition());
  g.n = l1 + l2;
  auto paths = enumerate_paths(l1, l2);
  std::vector<Tableau> ts;
  for (const auto& p : paths) ts.push_back(tableau_of(p));
  std::sort(ts.begin(), ts.end(), reading_word_less);
  for (const auto& t : ts) g.add_vertex(t);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    LatticePath p = path_of(g.vertices[v]);
    for (const auto& e : local_edges(p)) {
      int dst = g.id_of(tableau_of(e.target));
      if (dst < 0) throw std::logic_error("strip move left the path set");
      g.edges.push_back({static_cast<int>(v), dst, e.interval, e.cycle, two_row_transition(p, e.interval, e.move)});
    }
  }
  g.sort_edges();
  return g;
}

// --- rectangular decomposition -----------------------------------------------

// p = d^{n_0} D_1 d^{n_1} ... D_l d^{n_l}, with the D_k maximal Dyck blocks.
// The d-runs are the down-steps lit by light from the right: those after
// which the path never returns to their starting height.
struct RectDecomp {
  std::vector<int> exponents;     // n_0..n_l
  std::vector<Interval> dyck;     // beta^(1)..beta^(l)
  std::vector<Interval> singles;  // alpha^(0)..alpha^(l); first and last may be empty

  // (alpha^(0), beta^(1), alpha^(1), ..., beta^(l), alpha^(l)); an empty
  // block is an interval with hi = lo - 1.
  std::vector<Interval> rcomp() const {
    std::vector<Interval> out{singles[0]};
    for (std::size_t k = 0; k < dyck.size(); ++k) {
      out.push_back(dyck[k]);
      out.push_back(singles[k + 1]);
    }
    return out;
  }
};

inline std::vector<bool> east_exposed(const LatticePath& p) {
  auto h = p.heights();
  int n = p.size();
  std::vector<bool> lit(n, false);
  int suffix_max = h[n];
  for (int k = n; k >= 1; --k) {
    suffix_max = std::max(suffix_max, h[k]);
    lit[k - 1] = p.at(k) < 0 && suffix_max < h[k - 1];
  }
  return lit;
}

inline RectDecomp rect_decomp(const LatticePath& p) {
  RectDecomp d;
  auto lit = east_exposed(p);
  int n = p.size(), k = 1;
  auto take = [&](bool want) {
    int start = k;
    while (k <= n && lit[k - 1] == want) ++k;
    return Interval{start, k - 1};
  };
  d.singles.push_back(take(true));
  while (k <= n) {
    d.dyck.push_back(take(false));
    d.singles.push_back(take(true));
  }
  for (const auto& a : d.singles) d.exponents.push_back(a.size());
  return d;
}

inline std::vector<Interval> rcomp(const LatticePath& p) { return rect_decomp(p).rcomp(); }

inline std::string rcomp_to_string(const std::vector<Interval>& rc) {
  std::string s = "(";
  for (std::size_t k = 0; k < rc.size(); ++k) {
    if (k) s += ", ";
    s += rc[k].size() == 0 ? "{}" : to_string(rc[k]);
  }
  return s + ")";
}

// Dominance of rectangular compositions of [1, n]: for every x, the Dyck
// blocks of g cover at least as many of 1..x as those of a do.
inline bool rcomp_dominates(const std::vector<Interval>& g, const std::vector<Interval>& a) {
  auto covered = [](const std::vector<Interval>& rc, int x) {
    int c = 0;
    for (std::size_t k = 1; k < rc.size(); k += 2) c += std::max(0, std::min(x, rc[k].hi) - rc[k].lo + 1);
    return c;
  };
  int n = g.empty() ? 0 : g.back().hi;
  for (int x = 1; x <= n; ++x)
    if (covered(g, x) < covered(a, x)) return false;
  return true;
}

// Paths of (l1, l2) grouped by rcomp, groups ordered by rcomp.
inline std::vector<std::vector<LatticePath>> scc_by_rcomp(int l1, int l2) {
  std::map<std::vector<Interval>, std::vector<LatticePath>> fib;
  for (const auto& p : enumerate_paths(l1, l2)) fib[rcomp(p)].push_back(p);
  std::vector<std::vector<LatticePath>> out;
  for (auto& [key, ps] : fib) out.push_back(std::move(ps));
  return out;
}

// --- evacuation ---------------------------------------------------------------

inline std::vector<int> reflect(std::vector<int> s) {
  std::reverse(s.begin(), s.end());
  for (int& x : s) x = -x;
  return s;
}

// Reflect each Dyck block and reverse the order of the blocks.
inline LatticePath evac_by_blocks(const LatticePath& p) {
  auto d = rect_decomp(p);
  // Block order: d^{n_l} D_l# ... d^{n_1} D_1# d^{n_0}.
  std::vector<int> out;
  for (int k = static_cast<int>(d.dyck.size()); k >= 0; --k) {
    out.insert(out.end(), d.exponents[k], -1);
    if (k > 0) {
      const Interval& b = d.dyck[k - 1];
      auto part = reflect(std::vector<int>(p.steps.begin() + b.lo - 1, p.steps.begin() + b.hi));
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  return LatticePath(out);
}

// evac(p)_i = -p_{n+1-i} when n+1-i lies in a Dyck block, +p_{n+1-i} otherwise.
inline LatticePath evac_by_terms(const LatticePath& p) {
  auto rc = rcomp(p);
  int n = p.size();
  std::vector<bool> in_dyck(n + 1, false);
  for (std::size_t k = 1; k < rc.size(); k += 2)
    for (int x = rc[k].lo; x <= rc[k].hi; ++x) in_dyck[x] = true;
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = (in_dyck[n + 1 - i] ? -1 : 1) * p.at(n + 1 - i);
  return LatticePath(out);
}

// Reflect the whole path, then turn down every up-step lit by light from the
// left (one that reaches a new maximum height).
inline LatticePath evac_by_reflection(const LatticePath& p) {
  auto q = reflect(p.steps);
  auto out = q;
  int h = 0, best = 0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (q[k] > 0 && h + 1 > best) out[k] = -1;
    h += q[k];
    best = std::max(best, h);
  }
  return LatticePath(out);
}

inline LatticePath evac_by_tableau(const LatticePath& p) { return path_of(evacuate(tableau_of(p), p.size())); }

}  // namespace cskit

#endif  // CSKIT_TWOROW_HPP

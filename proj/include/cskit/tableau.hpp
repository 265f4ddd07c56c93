#ifndef CSKIT_TABLEAU_HPP
#define CSKIT_TABLEAU_HPP

// Partitions, compositions, words and tableaux (French notation: rows[0] is
// the bottom row).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cskit {

using Word = std::vector<int>;

// Letters written consecutively; letters above 9 are parenthesized.
inline std::string to_string(const Word& w) {
  std::string s;
  for (int x : w) s += x <= 9 ? std::to_string(x) : "(" + std::to_string(x) + ")";
  return s;
}

inline Word word_from_string(const std::string& s) {
  Word w;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '(') {
      auto close = s.find(')', k);
      if (close == std::string::npos) throw std::invalid_argument("unbalanced parenthesis in word");
      w.push_back(std::stoi(s.substr(k + 1, close - k - 1)));
      k = close;
    } else if (s[k] >= '1' && s[k] <= '9') {
      w.push_back(s[k] - '0');
    } else {
      throw std::invalid_argument("bad character in word: " + s);
    }
  }
  return w;
}

struct Interval {
  int lo = 1;
  int hi = 1;

  int size() const { return hi - lo + 1; }
  bool contains(int x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
  int mid() const { return (lo + hi) / 2; }

  auto operator<=>(const Interval&) const = default;
};

inline std::string to_string(const Interval& I) {
  return "[" + std::to_string(I.lo) + "," + std::to_string(I.hi) + "]";
}

struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (parts[k] <= 0)
        throw std::invalid_argument("partition parts must be positive");
      if (k > 0 && parts[k] > parts[k - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int length() const { return static_cast<int>(parts.size()); }
  int operator[](int k) const { return k < length() ? parts[k] : 0; }
  bool is_rectangle() const {
    return parts.empty() || parts.front() == parts.back();
  }

  auto operator<=>(const Partition&) const = default;
};

inline std::string to_string(const Partition& p) {
  std::string s;
  for (std::size_t k = 0; k < p.parts.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(p.parts[k]);
  }
  return s;
}

// All partitions of n, in reverse lexicographic order ((n) first).
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int bound) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, bound); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

// Partitions obtained by removing one corner box, with the row index (0-based)
// of the removed box.
inline std::vector<std::pair<Partition, int>> remove_corner(const Partition& lam) {
  std::vector<std::pair<Partition, int>> out;
  for (int r = 0; r < lam.length(); ++r) {
    if (lam[r] > lam[r + 1]) {
      std::vector<int> p = lam.parts;
      if (--p[r] == 0) p.pop_back();
      out.emplace_back(Partition(p), r);
    }
  }
  return out;
}

struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
      if (x <= 0) throw std::invalid_argument("composition parts must be positive");
  }

  int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int length() const { return static_cast<int>(parts.size()); }

  // Consecutive blocks alpha^(1..l), returned 0-indexed.
  std::vector<Interval> blocks() const {
    std::vector<Interval> out;
    int start = 1;
    for (int p : parts) {
      out.push_back({start, start + p - 1});
      start += p;
    }
    return out;
  }

  static Composition from_blocks(const std::vector<Interval>& bl) {
    std::vector<int> p;
    int expect = 1;
    for (const auto& b : bl) {
      if (b.size() <= 0) continue;
      if (b.lo != expect) throw std::invalid_argument("blocks are not consecutive");
      p.push_back(b.size());
      expect = b.hi + 1;
    }
    return Composition(p);
  }

  Composition reversed() const {
    return Composition(std::vector<int>(parts.rbegin(), parts.rend()));
  }

  auto operator<=>(const Composition&) const = default;
};

inline std::string to_string(const Composition& a) {
  std::string s = "(";
  for (std::size_t k = 0; k < a.parts.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(a.parts[k]);
  }
  return s + ")";
}

// Weak dominance via partial sums, shorter sequences padded with zeros.
inline bool dominates(const Composition& g, const Composition& a) {
  int sg = 0, sa = 0;
  std::size_t len = std::max(g.parts.size(), a.parts.size());
  for (std::size_t k = 0; k < len; ++k) {
    sg += k < g.parts.size() ? g.parts[k] : 0;
    sa += k < a.parts.size() ? a.parts[k] : 0;
    if (sg < sa) return false;
  }
  return true;
}

inline bool strictly_dominates(const Composition& g, const Composition& a) {
  return g != a && dominates(g, a);
}

struct Tableau {
  // inner[r] empty cells precede rows[r] in row r; inner is empty for
  // straight shapes.
  std::vector<int> inner;
  std::vector<std::vector<int>> rows;

  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> r, std::vector<int> in = {})
      : inner(std::move(in)), rows(std::move(r)) {
    while (!rows.empty() && rows.back().empty() && offset(rows.size() - 1) == 0)
      rows.pop_back();
  }

  int offset(std::size_t r) const {
    return r < inner.size() ? inner[r] : 0;
  }
  int num_rows() const { return static_cast<int>(rows.size()); }
  int num_cells() const {
    int s = 0;
    for (const auto& r : rows) s += static_cast<int>(r.size());
    return s;
  }
  bool is_straight() const {
    return std::all_of(inner.begin(), inner.end(), [](int x) { return x == 0; });
  }

  Partition shape() const {
    std::vector<int> p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      int len = offset(r) + static_cast<int>(rows[r].size());
      if (len > 0) p.push_back(len);
    }
    return Partition(p);
  }

  // Entry at (row, column) counting empty inner cells; 0 when absent.
  int at(int r, int c) const {
    if (r < 0 || r >= num_rows()) return 0;
    int k = c - offset(r);
    if (k < 0 || k >= static_cast<int>(rows[r].size())) return 0;
    return rows[r][k];
  }

  auto operator<=>(const Tableau&) const = default;
};

inline bool is_semistandard(const Tableau& t) {
  std::vector<int> outer;
  for (int r = 0; r < t.num_rows(); ++r) {
    outer.push_back(t.offset(r) + static_cast<int>(t.rows[r].size()));
    if (r > 0 && outer[r] > outer[r - 1]) return false;
    if (r > 0 && t.offset(r) > t.offset(r - 1)) return false;
    for (std::size_t k = 0; k < t.rows[r].size(); ++k) {
      if (t.rows[r][k] <= 0) return false;
      if (k > 0 && t.rows[r][k] < t.rows[r][k - 1]) return false;
      int c = t.offset(r) + static_cast<int>(k);
      if (r > 0) {
        int below = t.at(r - 1, c);
        if (c >= t.offset(r - 1) && below >= t.rows[r][k]) return false;
      }
    }
  }
  return true;
}

inline bool is_standard(const Tableau& t) {
  if (!is_semistandard(t)) return false;
  std::vector<int> all;
  for (const auto& r : t.rows) all.insert(all.end(), r.begin(), r.end());
  std::sort(all.begin(), all.end());
  for (std::size_t k = 0; k < all.size(); ++k)
    if (all[k] != static_cast<int>(k) + 1) return false;
  return true;
}

inline Word reading_word(const Tableau& t) {
  Word w;
  for (int r = t.num_rows() - 1; r >= 0; --r)
    w.insert(w.end(), t.rows[r].begin(), t.rows[r].end());
  return w;
}

// Refill a (straight or skew) shape with a reading word.
inline Tableau from_reading_word(const Word& w, const Tableau& shape_of) {
  Tableau t = shape_of;
  std::size_t pos = 0;
  for (int r = t.num_rows() - 1; r >= 0; --r)
    for (auto& x : t.rows[r]) x = w.at(pos++);
  if (pos != w.size()) throw std::invalid_argument("word length does not match shape");
  return t;
}

inline Tableau from_reading_word(const Word& w, const Partition& lam) {
  std::vector<std::vector<int>> rows;
  for (int p : lam.parts) rows.emplace_back(p, 0);
  return from_reading_word(w, Tableau(rows));
}

inline std::vector<int> weight(const Tableau& t) {
  std::vector<int> wt;
  for (const auto& r : t.rows)
    for (int x : r) {
      if (x > static_cast<int>(wt.size())) wt.resize(x, 0);
      ++wt[x - 1];
    }
  return wt;
}

// Standardization of a word: equal letters numbered left to right.
inline Word standardize(const Word& w) {
  std::vector<int> idx(w.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return w[a] < w[b]; });
  Word s(w.size());
  for (std::size_t k = 0; k < idx.size(); ++k) s[idx[k]] = static_cast<int>(k) + 1;
  return s;
}

inline Tableau standardize(const Tableau& t) {
  return from_reading_word(standardize(reading_word(t)), t);
}

// pi|_I: the subword of letters lying in I.
inline Word restrict_word(const Word& w, const Interval& I) {
  Word out;
  for (int x : w)
    if (I.contains(x)) out.push_back(x);
  return out;
}

inline Word destandardize_dyck(const Word& piI, const Interval& I) {
  if (I.size() % 2 == 0) throw std::invalid_argument("interval must have odd length");
  int m = (I.size() - 1) / 2;
  int k = I.lo + m;
  int last_low = 0, last_high = 0;
  Word out;
  for (int x : piI) {
    if (!I.contains(x)) throw std::invalid_argument("letter outside interval");
    if (x <= k) {
      if (x < last_low) throw std::invalid_argument("lower half not increasing");
      last_low = x;
      out.push_back(I.lo);
    } else {
      if (x < last_high) throw std::invalid_argument("upper half not increasing");
      last_high = x;
      out.push_back(I.lo + 1);
    }
  }
  return out;
}

inline Composition descent_composition(const Tableau& t) {
  int n = t.num_cells();
  std::vector<int> row_of(n + 2, -1);
  for (int r = 0; r < t.num_rows(); ++r)
    for (int x : t.rows[r]) row_of.at(x) = r;
  std::vector<int> parts;
  int last = 0;
  for (int i = 1; i < n; ++i) {
    if (row_of[i + 1] > row_of[i]) {
      parts.push_back(i - last);
      last = i;
    }
  }
  if (n > 0) parts.push_back(n - last);
  return Composition(parts);
}

inline bool is_descent(const Tableau& t, int i) {
  int ri = -1, rj = -1;
  for (int r = 0; r < t.num_rows(); ++r)
    for (int x : t.rows[r]) {
      if (x == i) ri = r;
      if (x == i + 1) rj = r;
    }
  return ri >= 0 && rj > ri;
}

struct RSKResult {
  Tableau P, Q;
};

inline RSKResult rsk(const Word& w) {
  std::vector<std::vector<int>> P, Q;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    int x = w[pos];
    std::size_t r = 0;
    for (;; ++r) {
      if (r == P.size()) {
        P.push_back({x});
        Q.push_back({static_cast<int>(pos) + 1});
        break;
      }
      auto it = std::upper_bound(P[r].begin(), P[r].end(), x);
      if (it == P[r].end()) {
        P[r].push_back(x);
        Q[r].push_back(static_cast<int>(pos) + 1);
        break;
      }
      std::swap(*it, x);
    }
  }
  return {Tableau(P), Tableau(Q)};
}

inline Tableau insertion_tableau(const Word& w) { return rsk(w).P; }

// Connectivity under the elementary Knuth moves, by breadth-first search.
inline bool knuth_equivalent(const Word& w, const Word& v) {
  if (w.size() != v.size()) return false;
  {
    Word a = w, b = v;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  std::set<Word> seen{w};
  std::queue<Word> q;
  q.push(w);
  while (!q.empty()) {
    Word u = q.front();
    q.pop();
    if (u == v) return true;
    for (std::size_t p = 0; p + 2 < u.size(); ++p) {
      int x = u[p], y = u[p + 1], z = u[p + 2];
      std::vector<Word> nb;
      // acb <-> cab with a <= b < c
      if (x <= z && z < y) nb.push_back({y, x, z});
      if (y <= z && z < x) nb.push_back({y, x, z});
      // bac <-> bca with a < b <= c
      if (y < x && x <= z) nb.push_back({x, z, y});
      if (z < x && x <= y) nb.push_back({x, z, y});
      for (auto& t : nb) {
        Word u2 = u;
        u2[p] = t[0];
        u2[p + 1] = t[1];
        u2[p + 2] = t[2];
        if (seen.insert(u2).second) q.push(u2);
      }
    }
  }
  return false;
}

inline Tableau restrict(const Tableau& t, const Interval& I) {
  if (!is_standard(t)) throw std::invalid_argument("restrict expects a standard tableau");
  std::vector<std::vector<int>> rows;
  std::vector<int> inner;
  for (int r = 0; r < t.num_rows(); ++r) {
    std::vector<int> row;
    int off = t.offset(r);
    bool started = false;
    for (std::size_t k = 0; k < t.rows[r].size(); ++k) {
      int x = t.rows[r][k];
      if (x < I.lo) {
        if (started) throw std::invalid_argument("not an interval restriction");
        ++off;
      } else if (x <= I.hi) {
        started = true;
        row.push_back(x);
      }
    }
    rows.push_back(row);
    inner.push_back(off);
  }
  while (!rows.empty() && rows.back().empty()) {
    rows.pop_back();
    inner.pop_back();
  }
  return Tableau(rows, inner);
}

// Jeu de taquin rectification by inward slides into inner corners.
inline Tableau jdt_rectify(const Tableau& t) {
  int nr = t.num_rows();
  std::vector<std::vector<int>> g(nr);
  for (int r = 0; r < nr; ++r) {
    g[r].assign(t.offset(r), 0);
    g[r].insert(g[r].end(), t.rows[r].begin(), t.rows[r].end());
  }
  std::vector<int> inner(nr);
  for (int r = 0; r < nr; ++r) inner[r] = t.offset(r);
  auto cell = [&](int r, int c) -> int {
    if (r < 0 || r >= nr || c < 0 || c >= static_cast<int>(g[r].size())) return -1;
    return g[r][c];
  };
  for (;;) {
    int cr = -1;
    for (int r = nr - 1; r >= 0; --r) {
      // inner corner: inner[r] > inner[r+1]
      int above = r + 1 < nr ? inner[r + 1] : 0;
      if (inner[r] > above) {
        cr = r;
        break;
      }
    }
    if (cr < 0) break;
    int r = cr, c = inner[cr] - 1;
    --inner[cr];
    for (;;) {
      int right = cell(r, c + 1);
      int up = cell(r + 1, c);
      if (right <= 0 && up <= 0) break;
      if (up > 0 && (right <= 0 || up <= right)) {
        g[r][c] = up;
        g[r + 1][c] = 0;
        ++r;
      } else {
        g[r][c] = right;
        g[r][c + 1] = 0;
        ++c;
      }
    }
    g[r].erase(g[r].begin() + c);
  }
  std::vector<std::vector<int>> rows;
  for (auto& row : g)
    if (!row.empty()) rows.push_back(row);
  return Tableau(rows);
}

// Rotate by 180 degrees and complement with respect to alphabet [1,n].
inline Tableau rotate_complement(const Tableau& t, int n) {
  if (!t.is_straight()) throw std::invalid_argument("rotation expects a straight tableau");
  Partition lam = t.shape();
  int l = lam.length();
  int w = l ? lam[0] : 0;
  std::vector<std::vector<int>> rows(l);
  std::vector<int> inner(l);
  for (int r = 0; r < l; ++r) {
    const auto& old = t.rows[l - 1 - r];
    inner[r] = w - static_cast<int>(old.size());
    for (auto it = old.rbegin(); it != old.rend(); ++it) rows[r].push_back(n + 1 - *it);
  }
  return Tableau(rows, inner);
}

inline Tableau evacuate(const Tableau& t, int n) {
  return jdt_rectify(rotate_complement(t, n));
}

inline Tableau evacuate(const Tableau& t) { return evacuate(t, t.num_cells()); }

// P(w#) with w# = (n+1-w_l)...(n+1-w_1); used to cross-check evacuate.
inline Tableau evacuate_by_insertion(const Tableau& t, int n) {
  Word w = reading_word(t), s;
  for (auto it = w.rbegin(); it != w.rend(); ++it) s.push_back(n + 1 - *it);
  return insertion_tableau(s);
}

inline bool reading_word_less(const Tableau& a, const Tableau& b) {
  return reading_word(a) < reading_word(b);
}

inline std::vector<Tableau> enumerate_ssyt(const Partition& lam, int n) {
  std::vector<Tableau> out;
  std::vector<std::vector<int>> rows;
  for (int p : lam.parts) rows.emplace_back(p, 0);
  int l = lam.length();
  std::function<void(int, int)> fill = [&](int r, int c) {
    if (r == l) {
      out.emplace_back(rows);
      return;
    }
    if (c == lam[r]) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    for (int x = lo; x <= n; ++x) {
      rows[r][c] = x;
      fill(r, c + 1);
    }
    rows[r][c] = 0;
  };
  fill(0, 0);
  std::sort(out.begin(), out.end(), reading_word_less);
  return out;
}

inline std::vector<Tableau> enumerate_syt(const Partition& lam) {
  std::vector<Tableau> out;
  int n = lam.size(), l = lam.length();
  std::vector<std::vector<int>> rows(l);
  std::function<void(int)> place = [&](int x) {
    if (x > n) {
      out.emplace_back(rows);
      return;
    }
    for (int r = 0; r < l; ++r) {
      int len = static_cast<int>(rows[r].size());
      if (len < lam[r] && (r == 0 || static_cast<int>(rows[r - 1].size()) > len)) {
        rows[r].push_back(x);
        place(x + 1);
        rows[r].pop_back();
      }
    }
  };
  place(1);
  std::sort(out.begin(), out.end(), reading_word_less);
  return out;
}

// Every letter i > 1 that occurs has an occurrence in a strictly higher row
// than some occurrence of i-1, and the letters used are exactly 1..k.
inline bool is_quasi_yamanouchi(const Tableau& t) {
  std::map<int, std::pair<int, int>> rows_of;  // letter -> (min row, max row)
  for (int r = 0; r < t.num_rows(); ++r)
    for (int x : t.rows[r]) {
      auto [it, fresh] = rows_of.try_emplace(x, r, r);
      if (!fresh) {
        it->second.first = std::min(it->second.first, r);
        it->second.second = std::max(it->second.second, r);
      }
    }
  int expect = 1;
  for (const auto& [x, mm] : rows_of) {
    if (x != expect++) return false;
    if (x > 1 && mm.second <= rows_of[x - 1].first) return false;
  }
  return true;
}

inline std::vector<Tableau> enumerate_qyt(const Partition& lam) {
  std::vector<Tableau> out;
  for (auto& t : enumerate_ssyt(lam, lam.size()))
    if (is_quasi_yamanouchi(t)) out.push_back(t);
  return out;
}

inline std::int64_t hook_length_count(const Partition& lam) {
  int n = lam.size();
  std::vector<int> conj(lam.length() ? lam[0] : 0, 0);
  for (int p : lam.parts)
    for (int c = 0; c < p; ++c) ++conj[c];
  // n! / prod hooks, accumulated as a fraction in 64-bit (fine for n <= 20)
  std::int64_t num = 1, den = 1;
  for (int k = 2; k <= n; ++k) num *= k;
  for (int r = 0; r < lam.length(); ++r)
    for (int c = 0; c < lam[r]; ++c) den *= (lam[r] - c - 1) + (conj[c] - r - 1) + 1;
  return num / den;
}

// Polynomials in x_1..x_m as exponent-vector -> coefficient maps.
using Polynomial = std::map<std::vector<int>, std::int64_t>;

inline Polynomial schur_polynomial(const Partition& lam, int m) {
  Polynomial s;
  for (auto& t : enumerate_ssyt(lam, m)) {
    auto wt = weight(t);
    wt.resize(m, 0);
    ++s[wt];
  }
  return s;
}

inline Polynomial monomial_quasisymmetric(const std::vector<int>& beta, int m) {
  Polynomial out;
  int l = static_cast<int>(beta.size());
  std::vector<int> exps(m, 0);
  std::function<void(int, int)> rec = [&](int k, int next) {
    if (k == l) {
      ++out[exps];
      return;
    }
    for (int v = next; v <= m - (l - k); ++v) {
      exps[v] = beta[k];
      rec(k + 1, v + 1);
      exps[v] = 0;
    }
  };
  rec(0, 0);
  return out;
}

// All compositions refining alpha.
inline std::vector<std::vector<int>> refinements(const std::vector<int>& alpha) {
  std::vector<std::vector<int>> out{{}};
  for (int a : alpha) {
    std::vector<std::vector<int>> splits;
    for (int mask = 0; mask < (1 << (a - 1)); ++mask) {
      std::vector<int> s;
      int run = 1;
      for (int b = 0; b < a - 1; ++b) {
        if (mask >> b & 1) {
          s.push_back(run);
          run = 1;
        } else {
          ++run;
        }
      }
      s.push_back(run);
      splits.push_back(s);
    }
    std::vector<std::vector<int>> next;
    for (auto& pre : out)
      for (auto& s : splits) {
        auto v = pre;
        v.insert(v.end(), s.begin(), s.end());
        next.push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

inline Polynomial fundamental_quasisymmetric(const Composition& alpha, int m) {
  Polynomial f;
  for (auto& beta : refinements(alpha.parts))
    for (auto& [e, c] : monomial_quasisymmetric(beta, m)) f[e] += c;
  return f;
}

inline bool gessel_identity_check(const Partition& lam, int m) {
  Polynomial rhs;
  for (auto& t : enumerate_syt(lam))
    for (auto& [e, c] : fundamental_quasisymmetric(descent_composition(t), m)) rhs[e] += c;
  std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
  return schur_polynomial(lam, m) == rhs;
}

}  // namespace cskit

#endif  // CSKIT_TABLEAU_HPP

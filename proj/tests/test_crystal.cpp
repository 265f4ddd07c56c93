#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "cskit/crystal.hpp"

using namespace cskit;

namespace {

Tableau T(std::vector<std::vector<int>> rows) { return Tableau(std::move(rows)); }

Tableau example_f3() {
  return T({{1, 1, 1, 1, 2, 2, 3, 3, 3, 4}, {2, 2, 2, 3, 3, 4, 4, 4, 4}, {3, 3, 4}, {4}});
}

int brute_phi(Word w, int i) {
  int k = 0;
  while (auto nw = f(w, i)) {
    w = *nw;
    ++k;
  }
  return k;
}

int brute_eps(Word w, int i) {
  int k = 0;
  while (auto nw = e(w, i)) {
    w = *nw;
    ++k;
  }
  return k;
}

}  // namespace

TEST(Operators, SigmaExample) {
  auto b = T({{1, 2, 2}, {2, 3}, {3}});
  EXPECT_EQ(reading_word(b), (Word{3, 2, 3, 1, 2, 2}));
  auto fb = f(b, 2);
  ASSERT_TRUE(fb);
  EXPECT_EQ(*fb, T({{1, 2, 3}, {2, 3}, {3}}));
  EXPECT_EQ(phi(b, 2), 1);
  EXPECT_EQ(brute_phi(reading_word(b), 2), 1);
  EXPECT_EQ(cycle_of(b, 2), decreasing_cycle(6, 4));
  EXPECT_FALSE(quasi_edge(b, 2));
  EXPECT_EQ(e(*fb, 2), b);
}

TEST(Operators, F3Example) {
  auto b = example_f3();
  auto fb = f(b, 3);
  ASSERT_TRUE(fb);
  EXPECT_TRUE(is_semistandard(*fb));
  EXPECT_EQ(cycle_of(b, 3), decreasing_cycle(18, 13));
  EXPECT_EQ(cycle_of(b, 3).apply(standardize(reading_word(b))), standardize(reading_word(*fb)));
}

TEST(Operators, HighestWeight) {
  for (auto lam : {Partition({3, 2, 1}), Partition({4, 2}), Partition({2, 2, 1})}) {
    auto u = yamanouchi(lam);
    for (int i = 1; i < 5; ++i) {
      EXPECT_FALSE(e(u, i));
      EXPECT_EQ(eps(u, i), 0);
      EXPECT_EQ(phi(u, i), lam[i - 1] - lam[i]);
      EXPECT_EQ(brute_phi(reading_word(u), i), lam[i - 1] - lam[i]);
    }
  }
}

TEST(Operators, QuasiEdges) {
  EXPECT_TRUE(quasi_edge(Word{1, 1}, 1));
  EXPECT_TRUE(quasi_edge_by_std(Word{1, 1}, 1));
  // 622111 -> 622112 moves to another standardization class.
  EXPECT_EQ(f(Word{6, 2, 2, 1, 1, 1}, 1), (Word{6, 2, 2, 1, 1, 2}));
  EXPECT_FALSE(quasi_edge_by_std(Word{6, 2, 2, 1, 1, 1}, 1));
  EXPECT_FALSE(quasi_edge(Word{6, 2, 2, 1, 1, 1}, 1));
  EXPECT_THROW(cycle_of(Word{2, 2}, 1), std::invalid_argument);
}

TEST(Operators, StringLengthsMatchBruteForce) {
  for (int n = 1; n <= 5; ++n)
    for (auto& lam : partitions_of(n))
      for (auto& b : enumerate_ssyt(lam, 4)) {
        Word w = reading_word(b);
        for (int i = 1; i < 4; ++i) {
          ASSERT_EQ(phi(w, i), brute_phi(w, i));
          ASSERT_EQ(eps(w, i), brute_eps(w, i));
        }
      }
}

TEST(Operators, CycleLemmaAndQuasiCharacterizations) {
  for (int n = 1; n <= 6; ++n)
    for (auto& lam : partitions_of(n)) {
      auto g = build_crystal(lam, n);
      for (auto& ed : g.edges) {
        Word w = reading_word(g.vertices[ed.src]);
        Word w2 = reading_word(g.vertices[ed.dst]);
        auto c = cycle_of(w, ed.i);
        ASSERT_EQ(c.apply(standardize(w)), standardize(w2));
        ASSERT_EQ(quasi_edge(w, ed.i), quasi_edge_by_std(w, ed.i));
        ASSERT_EQ(quasi_edge(w, ed.i), c.is_identity());
      }
    }
}

TEST(Operators, CommuteWithKnuthMoves) {
  for (int n = 1; n <= 6; ++n) {
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    std::map<Tableau, std::vector<Word>> classes;
    do classes[insertion_tableau(w)].push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    for (auto& [P, ws] : classes)
      for (int i = 1; i < n; ++i) {
        std::set<Tableau> images;
        for (auto& v : ws) {
          auto fv = f(v, i);
          if (fv) images.insert(insertion_tableau(*fv));
          else images.insert(Tableau());
        }
        ASSERT_EQ(images.size(), 1u);
      }
  }
}

TEST(CrystalGraph, B21) {
  auto g = build_crystal(Partition({2, 1}), 3);
  EXPECT_EQ(g.vertices.size(), 8u);
  std::set<std::tuple<Word, int, Word>> got, want;
  for (auto& ed : g.edges)
    got.insert({reading_word(g.vertices[ed.src]), ed.i, reading_word(g.vertices[ed.dst])});
  auto W = [](std::initializer_list<int> x) { return Word(x); };
  want = {{W({2, 1, 1}), 1, W({2, 1, 2})}, {W({2, 1, 1}), 2, W({3, 1, 1})},
          {W({3, 1, 1}), 1, W({3, 1, 2})}, {W({2, 1, 2}), 2, W({2, 1, 3})},
          {W({2, 1, 3}), 2, W({3, 1, 3})}, {W({3, 1, 2}), 1, W({3, 2, 2})},
          {W({3, 2, 2}), 2, W({3, 2, 3})}, {W({3, 1, 3}), 1, W({3, 2, 3})}};
  EXPECT_EQ(got, want);
  EXPECT_EQ(g.vertices[g.highest], T({{1, 1}, {2}}));
  EXPECT_EQ(g.vertices[g.lowest], T({{2, 3}, {3}}));
}

TEST(CrystalGraph, SmallCases) {
  auto path = build_crystal(Partition({1}), 5);
  EXPECT_EQ(path.vertices.size(), 5u);
  EXPECT_EQ(path.edges.size(), 4u);
  auto single = build_crystal(Partition({2, 2}), 2);
  EXPECT_EQ(single.vertices.size(), 1u);
  EXPECT_TRUE(single.edges.empty());
  EXPECT_THROW(build_crystal(Partition({1, 1, 1}), 2), std::invalid_argument);
}

TEST(CrystalGraph, InverseOperatorsAndWeights) {
  auto g = build_crystal(Partition({3, 2, 1}), 4);
  for (auto& ed : g.edges) {
    auto back = e(g.vertices[ed.dst], ed.i);
    ASSERT_TRUE(back);
    ASSERT_EQ(*back, g.vertices[ed.src]);
    auto ws = g.weights[ed.src], wd = g.weights[ed.dst];
    ASSERT_EQ(wd[ed.i - 1], ws[ed.i - 1] - 1);
    ASSERT_EQ(wd[ed.i], ws[ed.i] + 1);
  }
  // reachability from the highest weight vertex
  std::vector<std::vector<int>> adj(g.vertices.size());
  for (auto& ed : g.edges) adj[ed.src].push_back(ed.dst);
  std::vector<bool> seen(g.vertices.size());
  std::vector<int> stack{g.highest};
  seen[g.highest] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj[v])
      if (!seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
  }
  EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](bool x) { return x; }));
}

TEST(Stembridge, PassesOnGenuineCrystals) {
  EXPECT_TRUE(stembridge_check(build_crystal(Partition({2, 1}), 3)).ok);
  EXPECT_TRUE(stembridge_check(build_crystal(Partition({3, 2, 1}), 3)).ok);
  for (int n = 1; n <= 6; ++n)
    for (auto& lam : partitions_of(n))
      for (int m = lam.length(); m <= std::min(n, 5); ++m) {
        auto rep = stembridge_check(build_crystal(lam, m));
        ASSERT_TRUE(rep.ok) << to_string(lam) << " n=" << m << ": " << rep.first();
      }
}

TEST(Stembridge, DetectsRedirectedEdge) {
  auto g = build_crystal(Partition({2, 1}), 3);
  auto& ed = g.edges.front();
  ed.dst = (ed.dst + 3) % static_cast<int>(g.vertices.size());
  auto rep = stembridge_check(g);
  EXPECT_FALSE(rep.ok);
  EXPECT_FALSE(rep.failures.empty());
}

TEST(Lusztig, CrystalInvolution) {
  auto g = build_crystal(Partition({2, 1}), 3);
  auto m = lusztig_crystal(g);
  EXPECT_EQ(m.vertex_map[g.highest], g.lowest);
  // the two standard tableaux swap
  int a = g.id_of(T({{1, 2}, {3}})), b = g.id_of(T({{1, 3}, {2}}));
  EXPECT_EQ(m.vertex_map[a], b);
  EXPECT_EQ(m.vertex_map[b], a);
  for (int n = 1; n <= 5; ++n)
    for (auto& lam : partitions_of(n))
      for (int k = lam.length(); k <= std::min(n, 4); ++k)
        ASSERT_TRUE(lusztig_crystal_check(build_crystal(lam, k))) << to_string(lam);
}

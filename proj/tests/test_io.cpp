#include <gtest/gtest.h>

#include "cskit/io.hpp"
#include "cskit/mutations.hpp"
#include "fixtures.hpp"

using namespace cskit;

namespace {

std::string expect_error_at(const std::string& text) {
  try {
    parse_document(text);
  } catch (const DocumentError& e) {
    return e.where();
  }
  return "<no error>";
}

}  // namespace

TEST(GraphDocument, SkeletonRoundTrip) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& lam : partitions_of(n)) {
      SkeletonGraph g = build_skeleton_direct(lam);
      GraphDocument d = to_document(g);
      GraphDocument back = parse_document(to_json(d).dump());
      ASSERT_EQ(back, d) << to_string(lam);
      SkeletonGraph h = skeleton_from_document(back);
      auto rep = compare_skeletons(g, h);
      ASSERT_TRUE(rep.ok) << to_string(lam) << ": " << rep.first();
      ASSERT_EQ(h.shape, lam);
    }
}

TEST(GraphDocument, AbstractGraphRoundTrip) {
  SkeletonGraph g = build_skeleton_direct(Partition({3, 2, 1}));
  LabeledGraph lg = g.labeled();
  auto types = g.types();
  GraphDocument d = to_document(lg, &types);
  auto j = to_json(d);
  EXPECT_FALSE(j["vertices"][0].contains("rows"));
  GraphDocument back = parse_document(j.dump());
  EXPECT_EQ(back, d);
  LabeledGraph again = labeled_from_document(back);
  EXPECT_EQ(again.labels, lg.labels);
  EXPECT_EQ(again.edges, lg.edges);
  EXPECT_THROW(skeleton_from_document(back), DocumentError);
}

TEST(GraphDocument, ErrorsCarryLocations) {
  EXPECT_EQ(expect_error_at("{"), "byte 2");
  EXPECT_EQ(expect_error_at(R"({"n": 3, "vertices": [], "edges": []})"), "");
  EXPECT_EQ(expect_error_at(R"({"schema_version": 9, "n": 3, "vertices": [], "edges": []})"), "/schema_version");
  EXPECT_EQ(expect_error_at(R"({"schema_version": 1, "n": 3,
      "vertices": [{"id": 0, "descent_composition": [3]}, {"id": 2, "descent_composition": [3]}], "edges": []})"),
            "/vertices/1/id");
  EXPECT_EQ(expect_error_at(R"({"schema_version": 1, "n": 3,
      "vertices": [{"id": 0, "descent_composition": [2]}], "edges": []})"),
            "/vertices/0/descent_composition");
  EXPECT_EQ(expect_error_at(R"({"schema_version": 1, "n": 3,
      "vertices": [{"id": 0, "descent_composition": [2, 1]}, {"id": 1, "descent_composition": [1, 2]}],
      "edges": [{"src": 0, "dst": 1, "interval": [1, 2]}]})"),
            "/edges/0/interval");
  EXPECT_EQ(expect_error_at(R"({"schema_version": 1, "n": 3,
      "vertices": [{"id": 0, "descent_composition": [2, 1]}],
      "edges": [{"src": 0, "dst": 5, "interval": [1, 3]}]})"),
            "/edges/0/dst");
  EXPECT_EQ(expect_error_at(R"({"schema_version": 1, "n": 3,
      "vertices": [{"id": 0, "descent_composition": [2, 1]}, {"id": 1, "descent_composition": [1, 2]}],
      "edges": [{"src": 0, "dst": 1, "interval": [1, 3], "type": "SIDEWAYS"}]})"),
            "/edges/0/type");
}

TEST(GraphDocument, RowsMustMatchDescents) {
  auto d = to_document(build_skeleton_direct(Partition({2, 1})));
  d.vertices[0].descent_composition = Composition({3});
  EXPECT_THROW(skeleton_from_document(d), DocumentError);
}

TEST(Dot, DeterministicAndAnnotated) {
  auto d1 = to_dot(to_document(build_skeleton_direct(Partition({3, 3}))), "CS(3,3)");
  auto d2 = to_dot(to_document(build_skeleton_direct(Partition({3, 3}))), "CS(3,3)");
  EXPECT_EQ(d1, d2);
  EXPECT_NE(d1.find("digraph \"CS(3,3)\""), std::string::npos);
  EXPECT_NE(d1.find("I=[1,5] (5,4,3) INCREASING"), std::string::npos);
  std::size_t arrows = 0;
  for (std::size_t p = d1.find("->"); p != std::string::npos; p = d1.find("->", p + 1)) ++arrows;
  EXPECT_EQ(arrows, 10u);
}

TEST(Figures, SeededFiguresMatch) {
  auto rep = figure_fidelity_check(CSKIT_FIXTURE_DIR);
  EXPECT_TRUE(rep.ok) << rep.first();
  EXPECT_THROW(figure_fidelity_check("/nonexistent"), std::runtime_error);
}

TEST(Figures, MutatedFixtureFailsEverySystem) {
  std::ifstream in(std::string(CSKIT_FIXTURE_DIR) + "/mutants/cs321_delete_preserving.json");
  ASSERT_TRUE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  LabeledGraph g = labeled_from_document(parse_document(ss.str()));
  for (auto s : {AxiomSystem::GL, AxiomSystem::SN, AxiomSystem::LOCAL}) EXPECT_FALSE(verify(s, g).pass());
  auto lg = build_skeleton_direct(Partition({3, 2, 1})).labeled();
  EXPECT_EQ(g.edges.size() + 1, lg.edges.size());
}

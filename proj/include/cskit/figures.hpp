#ifndef CSKIT_FIGURES_HPP
#define CSKIT_FIGURES_HPP

// Hand-transcribed figure edge lists (JSON golden files) and their comparison
// with built skeletons.

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>

#include "json.hpp"
#include "skeleton.hpp"

namespace cskit {

inline nlohmann::json load_figure_file(const std::string& dir, const std::string& name) {
  std::ifstream in(dir + "/figures/" + name);
  if (!in) throw std::runtime_error("missing figure file " + dir + "/figures/" + name);
  return nlohmann::json::parse(in);
}

struct FigureEdge {
  Tableau src;
  Interval interval;
  Tableau dst;
  std::optional<Cycle> cycle;
};

struct Figure {
  Partition shape;
  std::vector<Tableau> vertices;
  std::vector<FigureEdge> edges;
};

inline Figure figure_from_json(const nlohmann::json& j) {
  Figure f;
  f.shape = Partition(j.at("shape").get<std::vector<int>>());
  std::map<std::string, Tableau> names;
  for (const auto& v : j.at("vertices")) {
    Tableau t(v.at("rows").get<std::vector<std::vector<int>>>());
    names[v.at("name").get<std::string>()] = t;
    f.vertices.push_back(t);
  }
  for (const auto& e : j.at("edges")) {
    auto iv = e.at("interval").get<std::vector<int>>();
    FigureEdge fe{names.at(e.at("src")), {iv.at(0), iv.at(1)}, names.at(e.at("dst")), std::nullopt};
    if (e.contains("cycle")) fe.cycle = Cycle{e.at("cycle").get<std::vector<int>>()};
    f.edges.push_back(fe);
  }
  return f;
}

// The edges of g between the given tableaux equal the figure's edges; cycles
// are compared where the figure records them.
inline CheckReport matches_figure(const SkeletonGraph& g, const Figure& f,
                                  const std::map<Tableau, Tableau>& rename = {}) {
  CheckReport rep;
  auto name = [&](const Tableau& t) {
    auto it = rename.find(t);
    return it == rename.end() ? t : it->second;
  };
  std::set<Tableau> verts(f.vertices.begin(), f.vertices.end());
  std::map<std::tuple<Tableau, Interval, Tableau>, std::optional<Cycle>> have;
  for (const auto& e : g.edges) {
    Tableau a = name(g.vertices[e.src]), b = name(g.vertices[e.dst]);
    if (verts.count(a) && verts.count(b)) have[{a, e.interval, b}] = e.cycle;
  }
  std::set<std::tuple<Tableau, Interval, Tableau>> want;
  for (const auto& e : f.edges) {
    want.insert({e.src, e.interval, e.dst});
    auto it = have.find({e.src, e.interval, e.dst});
    if (it == have.end()) {
      rep.fail("missing figure edge " + to_string(reading_word(e.src)) + " " + to_string(e.interval));
    } else if (e.cycle && it->second != e.cycle) {
      rep.fail("cycle mismatch on " + to_string(reading_word(e.src)) + " " + to_string(e.interval));
    }
  }
  for (const auto& [k, c] : have)
    if (!want.count(k))
      rep.fail("extra edge " + to_string(reading_word(std::get<0>(k))) + " " + to_string(std::get<1>(k)));
  return rep;
}

// All seeded figures: the skeleton of (2,1), CS(3,3) with its cycles, and
// the CS(2,2,1) and CS(3,2) subgraphs, the former also as the window [1,5]
// of CS(3,2,1). Both builders are compared.
inline CheckReport figure_fidelity_check(const std::string& dir) {
  CheckReport rep;
  auto both = [&](const Figure& fig, const std::string& tag) {
    rep.merge(matches_figure(build_skeleton_direct(fig.shape), fig), tag + " direct: ");
    rep.merge(matches_figure(build_skeleton_contraction(fig.shape), fig), tag + " contraction: ");
  };
  auto b21 = load_figure_file(dir, "b21.json");
  Figure f21 = figure_from_json({{"shape", b21["shape"]}, {"vertices", b21["skeleton"]["vertices"]},
                                 {"edges", b21["skeleton"]["edges"]}});
  both(f21, "CS(2,1)");
  auto g21 = build_skeleton_direct(f21.shape);
  if (g21.vertices.size() != 2 || g21.edges.size() != 1) rep.fail("CS(2,1) does not have 2 vertices and 1 edge");

  Figure f33 = figure_from_json(load_figure_file(dir, "cs33.json"));
  both(f33, "CS(3,3)");
  auto g33 = build_skeleton_direct(f33.shape);
  if (g33.vertices.size() != 5 || g33.edges.size() != 10) rep.fail("CS(3,3) does not have 5 vertices and 10 edges");

  auto j221 = load_figure_file(dir, "subgraphs_221.json");
  both(figure_from_json(j221), "CS(2,2,1)");
  both(figure_from_json(load_figure_file(dir, "subgraphs_32.json")), "CS(3,2)");

  // Window [1,5] of CS(3,2,1): intervals only, the listed parent tableaux
  // renamed to their rectified restrictions.
  auto g321 = build_skeleton_direct(Partition(j221.at("parent_shape").get<std::vector<int>>()));
  auto r = restrict_skeleton(g321, {1, 5});
  SkeletonGraph sub = g321;
  sub.edges.clear();
  for (const auto& e : r.edges) sub.edges.push_back({e.src, e.dst, e.interval, std::nullopt, EdgeType::Preserving});
  std::map<Tableau, Tableau> rename;
  for (const auto& rows : j221.at("parent_tableaux")) {
    Tableau t(rows.get<std::vector<std::vector<int>>>());
    rename[t] = window_image(t, {1, 5});
  }
  Figure fw = figure_from_json(j221);
  for (auto& e : fw.edges) e.cycle.reset();
  rep.merge(matches_figure(sub, fw, rename), "CS(3,2,1) window [1,5]: ");
  return rep;
}

}  // namespace cskit

#endif  // CSKIT_FIGURES_HPP

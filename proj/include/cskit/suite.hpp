#ifndef CSKIT_SUITE_HPP
#define CSKIT_SUITE_HPP

// The per-shape invariant battery: builder agreement, edge calculus, dual
// equivalence, branching, Lusztig symmetry, strong components, top subcrystal,
// commutation coverage, and the two-row path model where it applies.

#include <future>
#include <optional>
#include <string>
#include <vector>

#include "axioms.hpp"
#include "skeleton.hpp"
#include "tworow.hpp"

namespace cskit {

inline const std::vector<std::string>& suite_columns() {
  static const std::vector<std::string> cols{"oracle", "descent",     "de",     "branching", "lusztig",
                                             "scc",    "top-crystal", "commutation", "two-row"};
  return cols;
}

struct SuiteRow {
  Partition shape;
  // One entry per column; nullopt where the check does not apply.
  std::vector<std::optional<CheckReport>> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (c && !c->ok) return false;
    return true;
  }
};

inline CheckReport two_row_agreement_check(int l1, int l2) {
  CheckReport rep;
  const SkeletonGraph g = build_skeleton_direct(l2 > 0 ? Partition({l1, l2}) : Partition({l1}));
  rep.merge(compare_skeletons(build_skeleton_paths(l1, l2), g), "path skeleton: ");
  std::set<std::set<LatticePath>> generic, fibers;
  for (const auto& comp : scc(g)) {
    std::set<LatticePath> c;
    for (int v : comp) c.insert(path_of(g.vertices[v]));
    generic.insert(c);
  }
  for (const auto& fib : scc_by_rcomp(l1, l2)) fibers.insert({fib.begin(), fib.end()});
  if (generic != fibers) rep.fail("strong components differ from rcomp fibers");
  for (const auto& p : enumerate_paths(l1, l2)) {
    LatticePath e = evac_by_tableau(p);
    if (evac_by_blocks(p) != e || evac_by_terms(p) != e || evac_by_reflection(p) != e)
      rep.fail("evacuation methods disagree on " + to_string(p));
  }
  return rep;
}

inline SuiteRow run_suite_shape(const Partition& lam) {
  SuiteRow row{lam, {}};
  SkeletonGraph g = build_skeleton_direct(lam);
  row.checks.push_back(compare_skeletons(g, build_skeleton_contraction(lam)));
  row.checks.push_back(edge_invariants_check(g));
  row.checks.push_back(de_subgraph_check(g));
  row.checks.push_back(branching_check(g));
  CheckReport lz = lusztig_invariance_check(g);
  lz.merge(window_checks(g));
  row.checks.push_back(lz);
  CheckReport sc;
  if (is_strongly_connected(g) != lam.is_rectangle()) sc.fail("strong connectivity differs from being a rectangle");
  row.checks.push_back(sc);
  row.checks.push_back(top_subcrystal_check(g));
  row.checks.push_back(commutation_scan(g.labeled()).report);
  if (lam.length() <= 2)
    row.checks.push_back(two_row_agreement_check(lam[0], lam[1]));
  else
    row.checks.push_back(std::nullopt);
  return row;
}

// All shapes of 1..max_n, in order; shapes run concurrently.
inline std::vector<SuiteRow> run_suite(int max_n) {
  std::vector<std::future<SuiteRow>> jobs;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& lam : partitions_of(n))
      jobs.push_back(std::async(std::launch::async, [lam] { return run_suite_shape(lam); }));
  std::vector<SuiteRow> rows;
  for (auto& j : jobs) rows.push_back(j.get());
  return rows;
}

}  // namespace cskit

#endif  // CSKIT_SUITE_HPP

// Command-line front end: build skeletons, export JSON/DOT, run the axiom
// verifiers and the invariant suite, and inspect branching, strong
// components, two-row paths and dual equivalence graphs.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or parse error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cskit/cskit.hpp"

#ifndef CSKIT_FIXTURE_DIR
#define CSKIT_FIXTURE_DIR "fixtures"
#endif

using namespace cskit;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Partition parse_shape(const std::string& s) {
  if (s.empty()) throw UsageError("empty shape");
  std::vector<int> parts;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("shape \"" + s + "\": \"" + tok + "\" is not a positive integer");
    parts.push_back(std::stoi(tok));
  }
  if (s.back() == ',') throw UsageError("shape \"" + s + "\" ends with a comma");
  try {
    return Partition(parts);
  } catch (const std::invalid_argument& e) {
    throw UsageError("shape \"" + s + "\": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string graph_name(const Partition& lam) { return "CS(" + to_string(lam) + ")"; }

std::string rows_of(const Tableau& t) { return rows_text(t.rows); }

int env_max_n() {
  const char* v = std::getenv("CSKIT_MAX_N");
  if (!v || !*v) return 7;
  try {
    return std::stoi(v);
  } catch (...) {
    throw UsageError("CSKIT_MAX_N is not an integer");
  }
}

// --- build ------------------------------------------------------------------

int cmd_build(const std::string& shape, const std::string& format, const std::string& method,
              const std::string& out) {
  Partition lam = parse_shape(shape);
  SkeletonGraph g;
  if (method == "contraction") {
    g = build_skeleton_contraction(lam);
  } else {
    g = build_skeleton_direct(lam);
    if (method == "both") {
      auto rep = compare_skeletons(g, build_skeleton_contraction(lam));
      if (!rep.ok) {
        std::cerr << "builders disagree on " << graph_name(lam) << ":\n";
        for (const auto& f : rep.failures) std::cerr << "  " << f << "\n";
        return kFail;
      }
    }
  }
  auto doc = to_document(g);
  write_output(format == "dot" ? to_dot(doc, graph_name(lam)) : to_json(doc).dump(2) + "\n", out);
  return kPass;
}

// --- verify -----------------------------------------------------------------

int cmd_verify(const std::string& shape, const std::string& input, const std::string& system, bool as_json) {
  if (shape.empty() == input.empty()) throw UsageError("give exactly one of --shape or --input");
  LabeledGraph g;
  std::string name;
  if (!shape.empty()) {
    Partition lam = parse_shape(shape);
    g = build_skeleton_direct(lam).labeled();
    name = graph_name(lam);
  } else {
    try {
      g = labeled_from_document(parse_document(read_file(input)));
    } catch (const DocumentError& e) {
      throw UsageError(input + ": " + e.what());
    }
    name = input;
  }
  try {
    validate_graph(g);
  } catch (const std::invalid_argument& e) {
    throw UsageError(name + ": " + e.what());
  }
  std::vector<AxiomSystem> systems;
  if (system == "gl" || system == "all") systems.push_back(AxiomSystem::GL);
  if (system == "sn" || system == "all") systems.push_back(AxiomSystem::SN);
  if (system == "local" || system == "all") systems.push_back(AxiomSystem::LOCAL);

  bool all_pass = true;
  json report{{"graph", name}, {"systems", json::array()}};
  for (auto s : systems) {
    AxiomReport r = verify(s, g);
    all_pass = all_pass && r.pass();
    json js{{"system", to_string(s)}, {"pass", r.pass()}, {"verdicts", json::array()}, {"notes", r.notes}};
    for (const auto& v : r.verdicts)
      js["verdicts"].push_back({{"axiom", v.axiom}, {"pass", v.pass}, {"witness", v.witness}});
    report["systems"].push_back(js);
    if (!as_json) {
      std::cout << to_string(s) << " on " << name << ": " << (r.pass() ? "PASS" : "FAIL") << "\n";
      for (const auto& v : r.verdicts) {
        std::cout << "  " << std::left << std::setw(10) << v.axiom << (v.pass ? "PASS" : "FAIL");
        if (!v.pass) std::cout << "  " << v.witness;
        std::cout << "\n";
      }
      for (const auto& note : r.notes) std::cout << "  note: " << note << "\n";
    }
  }
  report["pass"] = all_pass;
  if (as_json) std::cout << report.dump(2) << "\n";
  return all_pass ? kPass : kFail;
}

// --- suite ------------------------------------------------------------------

int cmd_suite(int max_n) {
  int cap = env_max_n();
  if (max_n < 0) max_n = cap;
  if (max_n < 1) throw UsageError("suite size must be at least 1");
  if (max_n > cap)
    throw UsageError("suite size " + std::to_string(max_n) + " exceeds the cap " + std::to_string(cap) +
                     " (set CSKIT_MAX_N to raise it)");
  auto t0 = std::chrono::steady_clock::now();
  auto rows = run_suite(max_n);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const auto& cols = suite_columns();
  std::cout << std::left << std::setw(14) << "shape";
  for (const auto& c : cols) std::cout << std::setw(13) << c;
  std::cout << "\n";
  bool all_ok = true;
  std::vector<std::string> details;
  for (const auto& row : rows) {
    std::cout << std::setw(14) << to_string(row.shape);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const auto& c = row.checks[k];
      std::cout << std::setw(13) << (!c ? "-" : c->ok ? "pass" : "FAIL");
      if (c && !c->ok) {
        all_ok = false;
        details.push_back(to_string(row.shape) + " " + cols[k] + ": " + c->first());
      }
    }
    std::cout << "\n";
  }
  for (const auto& d : details) std::cout << "  " << d << "\n";
  std::cout << rows.size() << " shapes, n <= " << max_n << ", " << std::fixed << std::setprecision(2) << secs
            << " s: " << (all_ok ? "PASS" : "FAIL") << "\n";
  return all_ok ? kPass : kFail;
}

// --- branch -----------------------------------------------------------------

int cmd_branch(const std::string& shape) {
  Partition lam = parse_shape(shape);
  SkeletonGraph g = build_skeleton_direct(lam);
  if (g.n < 2) {
    std::cout << graph_name(lam) << " has no proper window\n";
    return kPass;
  }
  auto r = restrict_skeleton(g, {1, g.n - 1});
  std::cout << graph_name(lam) << " restricted to [1," << g.n - 1 << "]: " << r.components.size()
            << " components\n";
  for (const auto& c : r.components)
    std::cout << "  " << graph_name(c.shape) << ": " << c.vertices.size() << " vertices, top "
              << rows_of(g.vertices[c.vertices.front()]) << "\n";
  auto rep = branching_check(g);
  rep.merge(restriction_check(g, r));
  std::cout << "branching: " << (rep.ok ? "PASS" : "FAIL " + rep.first()) << "\n";
  return rep.ok ? kPass : kFail;
}

// --- scc --------------------------------------------------------------------

int cmd_scc(const std::string& shape) {
  Partition lam = parse_shape(shape);
  SkeletonGraph g = build_skeleton_direct(lam);
  auto comps = scc(g);
  std::cout << graph_name(lam) << ": " << comps.size() << " strongly-connected components\n";
  bool two_row = lam.length() <= 2;
  for (const auto& comp : comps) {
    std::cout << "  {";
    for (std::size_t k = 0; k < comp.size(); ++k) std::cout << (k ? "; " : "") << rows_of(g.vertices[comp[k]]);
    std::cout << "}";
    if (two_row) std::cout << " rcomp " << rcomp_to_string(rcomp(path_of(g.vertices[comp.front()])));
    std::cout << "\n";
  }
  bool ok = is_strongly_connected(g) == lam.is_rectangle();
  std::cout << "strongly connected: " << (is_strongly_connected(g) ? "yes" : "no") << "\n";
  return ok ? kPass : kFail;
}

// --- tworow -----------------------------------------------------------------

int cmd_tworow(const std::string& path_text, const std::string& shape) {
  if (path_text.empty() == shape.empty()) throw UsageError("give exactly one of --path or --shape");
  if (!shape.empty()) {
    Partition lam = parse_shape(shape);
    if (lam.length() > 2) throw UsageError("tworow: shape has more than two rows");
    auto classes = scc_by_rcomp(lam[0], lam[1]);
    for (const auto& cls : classes) {
      std::cout << rcomp_to_string(rcomp(cls.front())) << ":";
      for (const auto& p : cls) std::cout << " " << to_string(p);
      std::cout << "\n";
    }
    auto rep = two_row_agreement_check(lam[0], lam[1]);
    std::cout << classes.size() << " classes; path model vs generic: " << (rep.ok ? "PASS" : "FAIL " + rep.first())
              << "\n";
    return rep.ok ? kPass : kFail;
  }
  LatticePath p;
  try {
    p = path_from_string(path_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("path: ") + e.what());
  }
  Tableau t = tableau_of(p);
  std::cout << "path        " << to_string(p) << "\n";
  std::cout << "tableau     " << rows_of(t) << "\n";
  std::cout << "row word    " << to_string(row_word(p)) << "\n";
  std::cout << "descents    " << to_string(descent_composition(t)) << "\n";
  std::cout << "rcomp       " << rcomp_to_string(rcomp(p)) << "\n";
  for (const auto& e : local_edges(p))
    std::cout << "edge        " << to_string(e.interval) << " " << to_string(e.move) << " "
              << to_string(two_row_transition(p, e.interval, e.move)) << " -> " << to_string(e.target) << "\n";
  LatticePath a = evac_by_blocks(p), b = evac_by_terms(p), c = evac_by_reflection(p), d = evac_by_tableau(p);
  std::cout << "evac blocks " << to_string(a) << "\n";
  std::cout << "evac terms  " << to_string(b) << "\n";
  std::cout << "evac mirror " << to_string(c) << "\n";
  std::cout << "evac tableau " << to_string(d) << "\n";
  bool ok = a == d && b == d && c == d;
  std::cout << "evacuation methods " << (ok ? "agree" : "DISAGREE") << "\n";
  return ok ? kPass : kFail;
}

// --- de ---------------------------------------------------------------------

int cmd_de(const std::string& shape, const std::string& format, const std::string& out) {
  Partition lam = parse_shape(shape);
  SkeletonGraph g = build_skeleton_direct(lam);
  auto de = dual_equivalence_graph(g);
  std::ostringstream s;
  if (format == "dot") {
    s << "graph \"DE(" << to_string(lam) << ")\" {\n  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
      s << "  v" << v << " [label=\"" << rows_of(g.vertices[v]) << "\"];\n";
    for (const auto& e : de) s << "  v" << e.a << " -- v" << e.b << " [label=\"" << e.i << "\"];\n";
    s << "}\n";
  } else {
    json j{{"shape", lam.parts}, {"n", g.n}, {"vertices", json::array()}, {"edges", json::array()}};
    for (std::size_t v = 0; v < g.vertices.size(); ++v) j["vertices"].push_back({{"id", v}, {"rows", g.vertices[v].rows}});
    for (const auto& e : de) j["edges"].push_back({{"a", e.a}, {"b", e.b}, {"i", e.i}});
    s << j.dump(2) << "\n";
  }
  write_output(s.str(), out);
  auto rep = de_subgraph_check(g);
  if (!rep.ok) std::cerr << "DE check failed: " << rep.first() << "\n";
  return rep.ok ? kPass : kFail;
}

// --- figures ----------------------------------------------------------------

int cmd_figures(const std::string& dir) {
  CheckReport rep;
  try {
    rep = figure_fidelity_check(dir);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  std::cout << "seeded figures in " << dir << ": " << (rep.ok ? "PASS" : "FAIL") << "\n";
  for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
  return rep.ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crystal skeleton toolkit"};
  app.require_subcommand(1);

  std::string shape, format = "json", method = "direct", out, input, system = "all", path_text;
  std::string figures_dir = CSKIT_FIXTURE_DIR;
  bool as_json = false;
  int max_n = -1;

  auto* build = app.add_subcommand("build", "Build CS(shape) and write it as JSON or DOT");
  build->add_option("shape", shape, "Partition, e.g. 3,2,1")->required();
  build->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  build->add_option("--method", method)->check(CLI::IsMember({"direct", "contraction", "both"}));
  build->add_option("-o,--output", out, "Output file (default stdout)");

  auto* ver = app.add_subcommand("verify", "Run axiom verifiers on a shape or a graph document");
  ver->add_option("--shape", shape);
  ver->add_option("--input", input, "Graph document (JSON)");
  ver->add_option("--system", system)->check(CLI::IsMember({"gl", "sn", "local", "all"}));
  ver->add_flag("--json", as_json, "Print the report as JSON");

  auto* suite = app.add_subcommand("suite", "Run the invariant battery over all shapes up to max_n");
  suite->add_option("max_n", max_n, "Largest n (default and cap: CSKIT_MAX_N, else 7)");

  auto* branch = app.add_subcommand("branch", "Components of the window [1,n-1]");
  branch->add_option("shape", shape)->required();

  auto* sccs = app.add_subcommand("scc", "Strongly-connected components");
  sccs->add_option("shape", shape)->required();

  auto* tw = app.add_subcommand("tworow", "Two-row path tools");
  tw->add_option("--path", path_text, "Path over {u,d}, e.g. dduudd");
  tw->add_option("--shape", shape, "Two-row shape: list paths by rcomp");

  auto* de = app.add_subcommand("de", "Export the dual equivalence graph");
  de->add_option("shape", shape)->required();
  de->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  de->add_option("-o,--output", out);

  auto* figs = app.add_subcommand("figures", "Compare built skeletons with the seeded figure files");
  figs->add_option("--seeded-figures", figures_dir, "Fixture directory containing figures/");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*build) return cmd_build(shape, format, method, out);
    if (*ver) return cmd_verify(shape, input, system, as_json);
    if (*suite) return cmd_suite(max_n);
    if (*branch) return cmd_branch(shape);
    if (*sccs) return cmd_scc(shape);
    if (*tw) return cmd_tworow(path_text, shape);
    if (*de) return cmd_de(shape, format, out);
    if (*figs) return cmd_figures(figures_dir);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

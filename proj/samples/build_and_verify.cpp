// Builds the skeleton of a shape given on the command line (default 3,2,1),
// prints it as JSON and checks it against the three axiom systems.

#include <iostream>
#include <sstream>

#include "cskit/cskit.hpp"

int main(int argc, char** argv) {
  using namespace cskit;
  std::vector<int> parts{3, 2, 1};
  if (argc > 1) {
    parts.clear();
    std::stringstream ss(argv[1]);
    for (std::string tok; std::getline(ss, tok, ',');) parts.push_back(std::stoi(tok));
  }
  Partition lam(parts);
  SkeletonGraph g = build_skeleton_direct(lam);
  std::cout << to_json(to_document(g)).dump(2) << "\n";
  LabeledGraph lg = g.labeled();
  for (auto s : {AxiomSystem::GL, AxiomSystem::SN, AxiomSystem::LOCAL}) {
    auto r = verify(s, lg);
    std::cerr << to_string(s) << ": " << (r.pass() ? "pass" : "fail at " + r.first_failure()) << "\n";
  }
}

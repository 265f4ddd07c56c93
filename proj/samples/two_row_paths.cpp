// Walks every lattice path of a two-row shape (default 4,2) and prints its
// rectangular composition, its evacuation and its outgoing strip moves.

#include <cstdlib>
#include <iostream>

#include "cskit/cskit.hpp"

int main(int argc, char** argv) {
  using namespace cskit;
  int l1 = argc > 2 ? std::atoi(argv[1]) : 4;
  int l2 = argc > 2 ? std::atoi(argv[2]) : 2;
  for (const auto& p : enumerate_paths(l1, l2)) {
    std::cout << to_string(p) << "  rcomp " << rcomp_to_string(rcomp(p)) << "  evac " << to_string(evac_by_blocks(p))
              << "\n";
    for (const auto& e : local_edges(p))
      std::cout << "    " << to_string(e.interval) << " " << (e.move == StripMove::A ? "A" : "B") << " -> "
                << to_string(e.target) << " " << to_string(two_row_transition(p, e.interval, e.move)) << "\n";
  }
}

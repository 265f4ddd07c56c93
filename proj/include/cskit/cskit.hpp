#ifndef CSKIT_CSKIT_HPP
#define CSKIT_CSKIT_HPP

// Umbrella header.

#include "axioms.hpp"
#include "crystal.hpp"
#include "figures.hpp"
#include "io.hpp"
#include "labeled_graph.hpp"
#include "mutations.hpp"
#include "skeleton.hpp"
#include "suite.hpp"
#include "tableau.hpp"
#include "tworow.hpp"

#endif  // CSKIT_CSKIT_HPP

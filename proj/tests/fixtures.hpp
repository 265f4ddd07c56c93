#ifndef CSKIT_TESTS_FIXTURES_HPP
#define CSKIT_TESTS_FIXTURES_HPP

// Access to the figure fixtures shared by the tests and the acceptance binary.

#include <string>

#include "cskit/figures.hpp"

#ifndef CSKIT_FIXTURE_DIR
#define CSKIT_FIXTURE_DIR "fixtures"
#endif

namespace cskit::testing {

inline nlohmann::json load_fixture(const std::string& name) { return load_figure_file(CSKIT_FIXTURE_DIR, name); }

using cskit::Figure;
using cskit::figure_from_json;
using cskit::matches_figure;

}  // namespace cskit::testing

#endif  // CSKIT_TESTS_FIXTURES_HPP

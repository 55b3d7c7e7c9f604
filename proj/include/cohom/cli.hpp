// Command-line surface shared by the executable and the tests.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cohom/linalg.hpp"

namespace cohom {

// args excludes the program name. Exit codes: 0 success, 1 analysis failure or table
// mismatch, 2 usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "rows cols" followed by row-major entries, fractions allowed.
Sparse<Rational> read_matrix(const std::string& text);
std::string write_matrix(const Sparse<Rational>& m);

}  // namespace cohom

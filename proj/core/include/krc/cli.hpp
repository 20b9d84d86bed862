#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "krc/classical_crystal.hpp"

namespace krc {

struct RunConfig {
  std::string command;       // build | verify | bc-graph | rmatrix | energy |
                             // xsum | example
  int n = 4;
  int s = 1;
  std::string out;           // output path; empty = stdout
  std::string format = "json";  // json | dot
  std::size_t budget = kDefaultBudget;
  int factors = 1;           // tensor length for xsum
  std::string lambda;        // "k w2" shorthand or comma-separated Lambda coeffs
  std::string example_id;    // for the example command; empty = all
};

// Executes one command; returns the process exit status.  Artifacts go
// to config.out (or `out` when no path is given); errors are reported
// as one-line JSON on `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace krc

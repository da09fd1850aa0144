#pragma once

// The `brauer` command-line tool. Every subcommand reads only the files it
// is given and writes only the named outputs plus the standard streams.

#include <iosfwd>
#include <string>
#include <vector>

#include "brauer/spectrum.hpp"

namespace brauer::cli {

// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kDimensionError = 3,
  kNoConvergence = 4,
  kCheckFailed = 5,
  kNotAnEigenvector = 6,
};

// Eigenvalues rounded to significant_digits and sorted by modulus
// (descending) then phase (ascending), one literal per entry.
std::vector<std::string> display_spectrum(const Spectrum& s, int significant_digits = 12);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brauer::cli

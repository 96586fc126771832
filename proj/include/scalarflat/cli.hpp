#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scalarflat::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kNumericalInconsistency = 3,
  kNonConvergence = 4,
};

/// args excludes the program name. JSON goes to out, usage and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace scalarflat::cli

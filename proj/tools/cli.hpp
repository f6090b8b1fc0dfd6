#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dsr::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,        // unexpected internal error
  kMalformed = 2,      // bad arguments, tokens, graph6 or degrees
  kNotGraphic = 3,
  kContradiction = 4,  // soundness violation: ambiguous planned completion, collision, oracle disagreement
  kNotForcing = 5,     // generate on a sequence not proved forcing
};

/// Runs one command. args excludes the program name. Everything the
/// command prints goes to out; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dsr::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sepshape/core.hpp"

namespace sepshape {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitFalse = 1,      // a yes/no query answered no
  kExitUsage = 2,      // unknown command, malformed input or failed precondition
  kExitViolation = 3,  // the verification sweep found a counterexample
};

/// Parses and runs one `sepshape` command line. `args` excludes the
/// program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One line of box glyphs per part.
std::string render_ferrers(const Partition& p);

}  // namespace sepshape

#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace foxcolor {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,
  kExitBudget = 2,
  kExitVerify = 3,
};

/// Runs one command. args excludes the program name.
int run_cli(std::span<const std::string> args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace foxcolor

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chessarm::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitCommandError = 1,
  kExitConfigError = 2,
};

/// Entry point behind the `chessarm` executable. `args` excludes the
/// program name. `in` feeds the REPL.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace chessarm::cli

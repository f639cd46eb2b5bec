#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace brieskorn::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_internal = 1,
    exit_invalid_args = 2,
    exit_invalid_triple = 3,
    exit_overflow = 4,
    exit_counterexample = 5,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brieskorn::cli

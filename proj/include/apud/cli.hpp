#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace apud {

/// Exit codes shared by all subcommands.
namespace exit_code {
    inline constexpr int success = 0;
    inline constexpr int negative = 1;     // NotInClass, unsatisfiable, invalid realization
    inline constexpr int inconclusive = 2; // Inconclusive, NotFound on the grid
    inline constexpr int exhausted = 3;    // grid search ran out of its node budget
    inline constexpr int usage = 64;
    inline constexpr int bad_input = 65;
    inline constexpr int no_input = 66;
    inline constexpr int internal = 70;
}

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

}

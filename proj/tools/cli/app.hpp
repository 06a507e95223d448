// app.hpp - Command-line entry point (argument parsing, output files, exit codes)

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ness::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitNumerical = 3,
    kExitIo = 4,
};

// args excludes the program name. Data goes to `out` when no --out file is given.
int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ness::cli

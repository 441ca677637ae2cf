#pragma once

#include <iosfwd>

namespace ptower::cli {

/// Parses argv and runs the selected subcommand, writing data to `out` and
/// diagnostics to `err`. Returns the process exit code: 0 on success, 2 on
/// usage or domain errors, 3 on numerical non-convergence.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace ptower::cli

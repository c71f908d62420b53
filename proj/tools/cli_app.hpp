#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace permstat::cli {

/// Runs the permstat command line on the given arguments (program name not
/// included) and returns the process exit code:
///   0  success / verification passed
///   1  verification failure
///   2  usage, parse or domain error
/// All regular output goes to `out`, diagnostics to `err`.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace permstat::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rpg::cli {

enum ExitCode : int { kOk = 0, kPropertyFalse = 1, kUsage = 2, kInfeasible = 3 };

/// Runs one command line. args excludes the program name. Graph and CSV output
/// goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rpg::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace longcycle::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kAlgorithmFailure = 1, kBadInput = 2 };

/// Runs one command line (without the program name). Writes the JSON body
/// to `out` and a human summary or usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace longcycle::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sigf5::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kInputError = 2, kVerificationFailure = 3 };

// Runs one command line; argv[0] is the program name. Output goes to `out` unless --out names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigf5::cli

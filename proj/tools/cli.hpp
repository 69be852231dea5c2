#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bsbott::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int { kOk = 0, kValidation = 1, kCapExceeded = 2, kInternal = 3 };

/// Environment variable that replaces the library's default orbit caps.
inline constexpr const char* kCapEnv = "BSBOTT_CAP";

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bsbott::cli

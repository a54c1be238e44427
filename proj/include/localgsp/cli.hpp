#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace localgsp::cli {

inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2, kValidation = 3 };

// Runs one command line (args[0] is the program name). Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace localgsp::cli

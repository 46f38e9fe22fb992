#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibtl::cli {

// Exit codes of the command-line tool.
inline constexpr int kSuccess = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsageError = 2;

// Runs one invocation; `args` excludes the program name. Payload goes to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "3pi/5", "-pi/4", "2*pi", "pi" or plain decimal radians.
double parse_phase(const std::string& text);

}  // namespace fibtl::cli

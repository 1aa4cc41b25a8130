#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace augframes::cli {

// Exit codes: 0 every check passed, 1 a mathematical check failed, 2 usage or IO error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. JSON goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace augframes::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dsta::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kConfigError = 1;  // bad flags, unreadable or malformed input
inline constexpr int kUnsupported = 2;  // unsupported instance, oracle bound exceeded

// Entry point shared by main() and the tests. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dsta::cli

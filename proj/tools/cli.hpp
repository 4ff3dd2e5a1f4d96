#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace csync::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kUndecided = 3;
inline constexpr int kResourceError = 4;

// Runs one invocation; args excludes the program name. One JSON record goes
// to `out`, a human summary to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace csync::cli

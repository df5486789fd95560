#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bcoh::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 2;
inline constexpr int kInternalError = 3;

// Runs one command line (without the program name), writing the report to
// `out` and diagnostics to `err`. Output is deterministic for fixed inputs.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcoh::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fwps::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kParseError = 2;
inline constexpr int kValidationError = 3;
inline constexpr int kBadWeights = 4;
inline constexpr int kMissingBound = 5;

// Runs the fwps command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fwps::cli

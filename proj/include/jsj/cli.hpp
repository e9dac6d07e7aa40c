#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jsj::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;      // check/tree/qi/matching verdict is "no", or comm found an obstruction
inline constexpr int kParseError = 2;    // unreadable input or bad command line
inline constexpr int kInvalid = 3;       // input parses but violates a precondition
inline constexpr int kInapplicable = 4;  // comm: every test inapplicable
inline constexpr int kVerifyFailed = 5;
inline constexpr int kResourceLimit = 6;

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jsj::cli

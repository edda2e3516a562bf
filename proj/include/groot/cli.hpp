#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace groot::cli {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;        // verify-thm found a counterexample
inline constexpr int kNoRoot = 2;         // sqrt hit a contradiction
inline constexpr int kBadGraph6 = 3;      // malformed input line
inline constexpr int kOperational = 4;    // any other runtime error
inline constexpr int kUsage = 64;         // bad flags
}  // namespace exit_code

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace groot::cli

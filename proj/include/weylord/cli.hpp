#pragma once

#include <string>
#include <vector>

namespace weylord::cli {

struct Result {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Exit codes: 0 success, 1 a verification (or a rook/rewrite comparison)
/// failed, 2 malformed or out-of-range input.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

/// Runs one invocation. args[0] is the program name.
Result run(const std::vector<std::string>& args);

}  // namespace weylord::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace swapedge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. `in` is read when a graph path is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace swapedge::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minsurf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Runs the command line; args[0] is the program name. Returns the process
/// exit status: 0 success, 1 usage or I/O error, 2 verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minsurf::cli

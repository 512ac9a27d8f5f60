#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gal2::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitVerifyFailure = 1;
inline constexpr int kExitUsage = 2;

// Parses and runs one command line (argv[0] excluded). All output goes to
// the supplied streams; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gal2::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dihedra::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kDiscrepancy = 2;

/// Runs one command line; args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dihedra::cli

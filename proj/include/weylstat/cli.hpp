#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylstat {

/// Exit codes of run_cli.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylstat

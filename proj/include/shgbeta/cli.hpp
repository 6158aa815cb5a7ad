#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shgbeta::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 2;
inline constexpr int exit_singularity = 3;
inline constexpr int exit_tolerance = 4;
inline constexpr int exit_usage = 64;

/// Run one subcommand. args excludes the program name. Reports go to out,
/// diagnostics to err; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int run(int argc, char** argv);

}  // namespace shgbeta::cli

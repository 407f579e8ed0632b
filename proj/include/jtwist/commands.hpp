#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jtwist
{

inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;

/// Entry point of the `jtwist` command line (argv without the program name).
/// Returns the process exit code: 0 all checks pass, 1 a check failed,
/// 2 usage error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace jtwist

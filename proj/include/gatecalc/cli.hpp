#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gatecalc::cli
{

/// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

/// `args` excludes the program name.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);
int run(int argc, char const *const *argv);

} // namespace gatecalc::cli

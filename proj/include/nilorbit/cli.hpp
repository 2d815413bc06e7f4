#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nilorbit::cli {

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitSuiteFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

/// Default prime bound, overridden by this environment variable.
inline constexpr const char* kPrimeBoundVariable = "NILORBIT_PRIMES_UP_TO";

/// Runs one command line (program name excluded). Data goes to out, a single
/// diagnostic line "nilorbit: error[<code>]: <message>" to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilorbit::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace secant::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Results go to
/// `out` as a single JSON document; usage errors print to `err` and return
/// kExitUsage; domain errors are written to `out` as {"error": ...} and
/// return kExitDomainError.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace secant::cli

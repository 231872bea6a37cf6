#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orient {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitStageFailure = 4;

/// Runs one CLI invocation (arguments without the program name). Results go
/// to `out` as digraph6 or JSON; diagnostics go to `err`. A graph PATH of
/// "-" reads from `in`.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace orient

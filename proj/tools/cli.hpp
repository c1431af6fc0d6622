#pragma once

#include <iosfwd>

namespace edskit::cli {

/// Runs one CLI invocation against the given streams and returns the process
/// exit code: 0 success (solve: EDS exists; verify/search: zero violations),
/// 1 parse or usage error, 2 capacity exceeded for the chosen operation,
/// 3 no EDS exists, 4 violations found, 5 decider mismatch.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace edskit::cli

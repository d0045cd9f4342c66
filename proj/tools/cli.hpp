// cli.hpp: the gbomb command-line driver, callable in-process.

#pragma once

#include <ostream>

namespace gbomb {

/// Exit codes: 0 success, 1 usage or config error, 2 numerical precondition
/// failure, 3 invariant violation.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace gbomb

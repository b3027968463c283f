#pragma once

#include <iosfwd>

namespace permtop {

/// Runs the command-line interface. Exit codes: 0 success, 1 verification
/// failure, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace permtop

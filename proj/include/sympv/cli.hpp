#pragma once

#include <iosfwd>
#include <vector>
#include <string>

namespace sympv {

/// Runs one CLI invocation. Exit codes: 0 success (findings allowed),
/// 1 verification failure, 2 usage error. Reports go to `out`, diagnostics
/// to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sympv

// Library entry point of the command-line front end; tools/main.cpp is a
// thin wrapper so every CLI path is unit-testable.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kq {

/// Runs one CLI invocation (args exclude the program name) and writes JSON
/// (or DOT) to out. Returns 0 on success/pass, 1 on validation failure,
/// 2 on usage or input errors.
int cli_run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace kq

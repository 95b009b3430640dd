#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace provsum {

// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 1;
inline constexpr int exit_resource_limit = 2;
inline constexpr int exit_not_conformant = 3;

/// Runs one command line (without the program name). Results go to `out`
/// (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace provsum

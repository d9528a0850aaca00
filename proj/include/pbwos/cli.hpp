#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pbwos {

/// Runs the command-line front end. `args` excludes the program name.
/// All regular output goes to `out`, diagnostics and timings to `err`.
/// Returns 0 on success, 2 on usage or configuration errors, 3 when more
/// than 0.1% of walks hit the max_steps guard.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pbwos

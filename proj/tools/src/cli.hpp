#pragma once

#include <iosfwd>

namespace pgph::cli {

/// Exit codes of the command-line tool.
enum Exit : int { ok = 0, failed = 1, usage = 2, budget = 3, data = 4 };

/// Runs one command line; all output goes to `out` and `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pgph::cli

#pragma once

#include <iosfwd>

namespace rankwb::cli {

/// Exit codes: 0 for a certified or successful verdict, 1 for a failed
/// certification, 2 for input errors (including budget overruns).
enum ExitCode : int { ok = 0, failed = 1, input_error = 2 };

/// Parses argv, runs one subcommand and writes exactly one JSON document to
/// `out` (or to the --output file).
int run(int argc, const char* const* argv, std::ostream& out);

}  // namespace rankwb::cli

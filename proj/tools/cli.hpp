#pragma once

#include <iosfwd>

namespace skelex::cli {

/// Runs the skelex command line. Exit codes: 0 success, 1 refusal on valid
/// input (failed criterion, non-good coloring, census bound, ...), 2 input
/// error, 3 internal error.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace skelex::cli

// Command-line front end, callable in-process so tests can drive it without
// spawning binaries.  argv follows the usual convention (argv[0] is the
// program name).  Exit code 0 on success, 2 when the requested analysis is
// not supported for the input (uncertified presentation, incomplete root
// closure), 1 on any error.
#pragma once

#include <iosfwd>

namespace wperp {

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace wperp

#pragma once

#include <iosfwd>

namespace zipmorph::cli {

// Parses argv and dispatches one subcommand. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zipmorph::cli

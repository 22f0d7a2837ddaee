#pragma once

#include <iosfwd>

namespace shellbar {

/// Command-line entry point: run, sweep, field, config and demo subcommands.
/// Returns 0 on success, 1 on usage or configuration errors and 2 on
/// numerical failures.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int cli_main(int argc, const char* const* argv);

}  // namespace shellbar

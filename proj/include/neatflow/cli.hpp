#pragma once

#include <string>
#include <vector>

namespace neatflow {

// Entry point shared by the neatflow binary and the test suites.
// Subcommands: run, sweep, report, trace. Returns 0 on success, 1 on
// configuration errors, 2 on I/O errors.
int cli_main(const std::vector<std::string>& args);
int cli_main(int argc, const char* const* argv);

} // namespace neatflow

#pragma once

// Command layer shared by the CLI and the tests: each command runs one
// workflow and writes its artifacts (JSON report + CSV table) into
// cfg.out_dir, stamped with the config hash. Throws SchemaError /
// NumericalError / PropertyError; the CLI maps those to exit codes.

#include <string>

#include "teichflow/config.hpp"

namespace teich {

// Dispatch cfg.command. Returns the list of artifact paths written.
std::vector<std::string> run_command(const RunConfig& cfg);

} // namespace teich

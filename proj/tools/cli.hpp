#pragma once

#include <rgsl/experiment.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace rgsl::cli {

enum ExitCode : int { kSuccess = 0, kConfigError = 1, kRuntimeError = 2 };

/// Parses `rgsl <task> [options]` (argv[0] excluded) into a config.
///
/// A --config file holds flat `key = value` lines using the long option
/// names; command-line flags override it and both override the preset of a
/// recognized dataset name. Throws ConfigError on unknown keys, bad values
/// or missing task-specific settings. Returns std::nullopt after printing
/// help to `out`.
std::optional<ExperimentConfig> parse_arguments(const std::vector<std::string>& args,
                                                std::ostream& out);

/// Full command: parse, run, print the summary table. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rgsl::cli

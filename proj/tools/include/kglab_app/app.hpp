#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>

#include "kglab/config.hpp"

namespace kglab::app {

enum ExitCode : int { kOk = 0, kToleranceFailure = 1, kConfigError = 2, kSolverFailure = 3 };

struct RunOptions {
  std::string out_path;                // empty: output.path from config, else stdout
  std::optional<std::uint64_t> seed;   // overrides the seed key
  int threads = 1;
};

// Every key understood by some subcommand.
const std::set<std::string>& known_keys();

// Runs one subcommand. CSV goes to the output target; diagnostics and failure
// messages go to `log`. Returns an ExitCode value.
int run_subcommand(const std::string& name, const Config& cfg, const RunOptions& opt,
                   std::ostream& log);

// As above but CSV is written to `csv` regardless of output settings.
int run_subcommand_to(const std::string& name, const Config& cfg, const RunOptions& opt,
                      std::ostream& csv, std::ostream& log);

}  // namespace kglab::app

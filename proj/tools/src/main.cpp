#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "kglab/config.hpp"
#include "kglab/errors.hpp"
#include "kglab_app/app.hpp"

int main(int argc, char** argv) {
  CLI::App cli{"Soliton stability lab for the focusing cubic Klein-Gordon equation"};
  cli.require_subcommand(1);
  std::string config_path, out_path;
  std::optional<std::uint64_t> seed;
  int threads = 1;
  cli.add_option("--config", config_path, "flat key=value config file");
  cli.add_option("--out", out_path, "CSV output path ('-' for stdout)");
  cli.add_option("--seed", seed, "seed for randomized checks");
  cli.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  const std::pair<const char*, const char*> subcommands[] = {
      {"verify-identities", "run the exact identity battery"},
      {"spectral", "bound states, scattering data and resonance quadratures"},
      {"simulate", "evolve the perturbation and record diagnostics per frame"},
      {"shoot", "select the unstable-direction parameter d by bisection"},
      {"decay-fit", "fit decay envelopes to a simulate CSV"},
  };
  for (const auto& [name, help] : subcommands) cli.add_subcommand(name, help)->fallthrough();
  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = cli.exit(e);
    return rc == 0 ? 0 : kglab::app::kConfigError;
  }

  kglab::Config cfg;
  if (!config_path.empty()) {
    try {
      cfg = kglab::Config::load(config_path);
    } catch (const kglab::ConfigError& e) {
      std::cerr << "config error: " << e.what() << "\n";
      return kglab::app::kConfigError;
    }
  }
  kglab::app::RunOptions opt;
  opt.out_path = out_path;
  opt.seed = seed;
  opt.threads = threads;
  return kglab::app::run_subcommand(cli.get_subcommands().front()->get_name(), cfg, opt,
                                    std::cerr);
}

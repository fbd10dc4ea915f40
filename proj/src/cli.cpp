#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <span>
#include <string>

#include "ctqw/run.hpp"

namespace ctqw {

namespace {

struct OptionSpec {
  const char* flag;
  const char* key;
  const char* help;
};

// Lattice and source flags shared by most subcommands.
constexpr OptionSpec kLatticeOptions[] = {
    {"--M", "M", "extent in x"},
    {"--N", "N", "extent in y"},
    {"--bc-x", "bc_x", "boundary condition in x: periodic|open"},
    {"--bc-y", "bc_y", "boundary condition in y: periodic|open"},
    {"--gamma", "gamma", "bond transmission rate (default 1)"},
};

constexpr OptionSpec kSourceOptions[] = {
    {"--source-x", "source_x", "source node x (default 1)"},
    {"--source-y", "source_y", "source node y (default 1)"},
};

constexpr OptionSpec kGridOptions[] = {
    {"--t-min", "t_min", "time grid start (default 0.01)"},
    {"--t-max", "t_max", "time grid end (default 100)"},
    {"--points-per-decade", "points_per_decade",
     "log grid density (default 300)"},
};

constexpr OptionSpec kOutputOptions[] = {
    {"--output,-o", "output", "output path, '-' = stdout (default)"},
    {"--format", "format", "output format: csv|json (default csv)"},
};

void add_option(CLI::App* cmd, std::map<std::string, std::string>& values,
                const OptionSpec& spec) {
  const std::string key = spec.key;
  cmd->add_option(spec.flag, spec.help)
      ->each([&values, key](std::string v) { values[key] = std::move(v); });
}

void add_options(CLI::App* cmd, std::map<std::string, std::string>& values,
                 std::span<const OptionSpec> specs) {
  for (const OptionSpec& spec : specs) add_option(cmd, values, spec);
}

void add_flag(CLI::App* cmd, std::map<std::string, std::string>& values,
              const char* flag, const char* key, const char* help) {
  const std::string k = key;
  cmd->add_flag(std::string(flag))
      ->description(help)
      ->each([&values, k](std::string) { values[k] = "true"; });
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{
      "continuous-time quantum and classical walks on 2D lattices with "
      "periodic/open boundaries"};
  app.require_subcommand(1);

  std::map<std::string, std::string> values;
  std::map<CLI::App*, std::string> config_paths;

  auto subcommand = [&](const char* name, const char* help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("--config", config_paths[cmd],
                    "key=value config file or JSON summary of a previous run "
                    "(flags win)");
    add_options(cmd, values, kOutputOptions);
    return cmd;
  };

  CLI::App* spectrum =
      subcommand("spectrum", "eigenvalues, Bloch angles and degeneracy classes");
  add_options(spectrum, values, kLatticeOptions);
  add_option(spectrum, values,
             {"--tol", "tol", "degeneracy tolerance (default 1e-9)"});
  add_option(spectrum, values,
             {"--dump-hamiltonian", "dump_hamiltonian",
              "also write the dense Hamiltonian as CSV to this path"});

  CLI::App* return_prob = subcommand(
      "return-prob",
      "averaged return probabilities p-bar, pi-bar and the bound mu");
  add_options(return_prob, values, kLatticeOptions);
  add_options(return_prob, values, kGridOptions);

  CLI::App* evolve =
      subcommand("evolve", "per-node probability snapshots over time");
  add_options(evolve, values, kLatticeOptions);
  add_options(evolve, values, kSourceOptions);
  add_options(evolve, values, kGridOptions);
  add_option(evolve, values,
             {"--time", "time", "single snapshot time (overrides the grid)"});

  CLI::App* limiting =
      subcommand("limiting", "long-time averaged transition probabilities");
  add_options(limiting, values, kLatticeOptions);
  add_options(limiting, values, kSourceOptions);
  add_option(limiting, values,
             {"--tol", "tol", "degeneracy tolerance (default 1e-9)"});
  add_option(limiting, values,
             {"--method", "method", "eigenclass|factorized"});

  CLI::App* marginal_cmd =
      subcommand("marginal", "limiting distribution summed along one axis");
  add_options(marginal_cmd, values, kLatticeOptions);
  add_options(marginal_cmd, values, kSourceOptions);
  add_option(marginal_cmd, values,
             {"--axis", "axis", "retained axis: x|y (default x)"});
  add_option(marginal_cmd, values,
             {"--tol", "tol", "degeneracy tolerance (default 1e-9)"});
  add_option(marginal_cmd, values,
             {"--method", "method", "eigenclass|factorized"});

  CLI::App* scan = subcommand(
      "scan-asymmetry",
      "corner-vs-mirror limiting probability differences over lattice sizes");
  add_flag(scan, values, "--square", "square", "vary M = N over the range");
  add_option(scan, values,
             {"--fix-m", "fix_m", "fix M, vary N over the range"});
  add_option(scan, values,
             {"--fix-n", "fix_n", "fix N, vary M over the range"});
  add_option(scan, values, {"--range", "range", "from:to (inclusive)"});
  add_option(scan, values,
             {"--bc", "bc", "boundary combination: open|cylinder|torus"});
  add_option(scan, values,
             {"--mirror", "mirror",
              "opposite-corner|axial (default by boundary combination)"});
  add_option(scan, values,
             {"--gamma", "gamma", "bond transmission rate (default 1)"});
  add_option(scan, values,
             {"--threshold", "threshold",
              "|delta| above this flags asymmetry (default 1e-8)"});
  add_option(scan, values,
             {"--max-workers", "max_workers",
              "parallel workers, 0 = auto (CTQW_MAX_WORKERS)"});

  CLI::App* continuum = subcommand(
      "continuum-compare",
      "finite torus vs the infinite-lattice Bessel solution");
  add_option(continuum, values, {"--M", "M", "torus extent in x (odd, default 101)"});
  add_option(continuum, values, {"--N", "N", "torus extent in y (odd, default 101)"});
  add_option(continuum, values,
             {"--gamma", "gamma", "bond transmission rate (default 1)"});
  add_option(continuum, values, {"--time", "time", "snapshot time (default 5)"});
  add_option(continuum, values,
             {"--max-displacement", "max_displacement",
              "compare |dx|,|dy| up to this (default 20)"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  CLI::App* parsed = app.get_subcommands().front();
  try {
    std::map<std::string, std::string> file_values;
    const std::string& config_path = config_paths[parsed];
    if (!config_path.empty()) {
      std::ifstream file(config_path);
      if (!file) {
        throw usage_error("cannot read config file '" + config_path + "'");
      }
      std::ostringstream text;
      text << file.rdbuf();
      file_values = parse_config_text(text.str());
    }
    return run(make_run_config(parsed->get_name(), file_values, values));
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ctqw

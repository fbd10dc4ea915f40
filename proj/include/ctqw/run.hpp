#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "ctqw/lattice.hpp"
#include "ctqw/limiting.hpp"
#include "ctqw/spectral.hpp"

namespace ctqw {

// Bad flags, malformed config files, unwritable outputs. Exit code 1, as
// opposed to numerical_error (exit code 2).
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Effective configuration of one CLI invocation. Values arrive as strings
// from flags or key=value config files (flags win) and are validated here.
struct RunConfig {
  std::string subcommand;

  std::optional<int> extent_x;  // M
  std::optional<int> extent_y;  // N
  BoundaryCondition bc_x = BoundaryCondition::Open;
  BoundaryCondition bc_y = BoundaryCondition::Open;
  double gamma = 1.0;
  int source_x = 1;
  int source_y = 1;

  double t_min = 1e-2;
  double t_max = 1e2;
  int points_per_decade = 300;
  std::optional<double> time;  // single-snapshot override

  Axis axis = Axis::X;
  LimitingMethod method = LimitingMethod::Eigenclass;

  bool square = false;
  std::optional<int> fix_m;
  std::optional<int> fix_n;
  std::optional<std::pair<int, int>> range;
  std::string scan_bc = "open";  // open | cylinder | torus
  std::optional<MirrorKind> mirror;

  double tol = kDegeneracyTol;
  double threshold = kAsymmetryThreshold;
  int max_displacement = 20;
  int max_workers = 0;

  std::optional<std::string> dump_hamiltonian;  // extra dense-CSV dump path

  std::string output = "-";  // "-" = stdout
  std::string format = "csv";

  // The full effective config, serialized losslessly; feeding it back as a
  // config file reproduces the run.
  std::map<std::string, std::string> to_map() const;
};

// Parses a flat key=value config file ('#' comments allowed) or the config
// block of a JSON summary emitted by a previous run.
std::map<std::string, std::string> parse_config_text(const std::string& text);

// Defaults, then config-file values, then CLI values.
RunConfig make_run_config(const std::string& subcommand,
                          const std::map<std::string, std::string>& file_values,
                          const std::map<std::string, std::string>& cli_values);

// Executes one subcommand and writes its output; returns the process exit
// code (0 success, 1 usage error, 2 numerical failure).
int run(const RunConfig& config);

// Full command-line round: parse argv, merge --config, dispatch.
int run_cli(int argc, const char* const* argv);

}  // namespace ctqw

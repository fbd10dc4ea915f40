#include "ctqw/run.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ctqw/continuum.hpp"
#include "ctqw/dynamics.hpp"
#include "ctqw/errors.hpp"

namespace ctqw {

namespace {

using Cell = std::variant<long long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void write_file(const std::string& path, const std::string& payload);

std::string format_cell(const Cell& cell) {
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
  return std::get<std::string>(cell);
}

Cell cell(int v) { return static_cast<long long>(v); }
Cell cell(long long v) { return v; }
Cell cell(double v) { return v; }
Cell cell(std::string v) { return v; }

int parse_int(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  int parsed = 0;
  try {
    parsed = std::stoi(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || value.empty()) {
    throw usage_error("value for '" + key + "' is not an integer: '" + value +
                      "'");
  }
  return parsed;
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double parsed = 0.0;
  try {
    parsed = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || value.empty()) {
    throw usage_error("value for '" + key + "' is not a number: '" + value +
                      "'");
  }
  return parsed;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw usage_error("value for '" + key + "' is not a boolean: '" + value +
                    "'");
}

std::pair<int, int> parse_range(const std::string& value) {
  const auto colon = value.find(':');
  if (colon == std::string::npos) {
    throw usage_error("range must look like 'from:to', got '" + value + "'");
  }
  return {parse_int("range", value.substr(0, colon)),
          parse_int("range", value.substr(colon + 1))};
}

Axis parse_axis(const std::string& value) {
  if (value == "x") return Axis::X;
  if (value == "y") return Axis::Y;
  throw usage_error("axis must be 'x' or 'y', got '" + value + "'");
}

LimitingMethod parse_method(const std::string& value) {
  if (value == "eigenclass") return LimitingMethod::Eigenclass;
  if (value == "factorized" || value == "resonance-factorized") {
    return LimitingMethod::ResonanceFactorized;
  }
  throw usage_error("method must be 'eigenclass' or 'factorized', got '" +
                    value + "'");
}

MirrorKind parse_mirror(const std::string& value) {
  if (value == "opposite-corner") return MirrorKind::OppositeCorner;
  if (value == "axial") return MirrorKind::Axial;
  throw usage_error("mirror must be 'opposite-corner' or 'axial', got '" +
                    value + "'");
}

BoundaryCondition parse_bc_or_usage(const std::string& key,
                                    const std::string& value) {
  try {
    return parse_boundary_condition(value);
  } catch (const std::invalid_argument& e) {
    throw usage_error(std::string(e.what()) + " (key '" + key + "')");
  }
}

void apply_value(RunConfig& config, const std::string& key,
                 const std::string& value) {
  if (key == "subcommand") {
    if (value != config.subcommand) {
      throw usage_error("config file is for subcommand '" + value +
                        "', invoked '" + config.subcommand + "'");
    }
  } else if (key == "M") {
    config.extent_x = parse_int(key, value);
  } else if (key == "N") {
    config.extent_y = parse_int(key, value);
  } else if (key == "bc_x") {
    config.bc_x = parse_bc_or_usage(key, value);
  } else if (key == "bc_y") {
    config.bc_y = parse_bc_or_usage(key, value);
  } else if (key == "gamma") {
    config.gamma = parse_double(key, value);
  } else if (key == "source_x") {
    config.source_x = parse_int(key, value);
  } else if (key == "source_y") {
    config.source_y = parse_int(key, value);
  } else if (key == "t_min") {
    config.t_min = parse_double(key, value);
  } else if (key == "t_max") {
    config.t_max = parse_double(key, value);
  } else if (key == "points_per_decade") {
    config.points_per_decade = parse_int(key, value);
  } else if (key == "time") {
    config.time = parse_double(key, value);
  } else if (key == "axis") {
    config.axis = parse_axis(value);
  } else if (key == "method") {
    config.method = parse_method(value);
  } else if (key == "square") {
    config.square = parse_bool(key, value);
  } else if (key == "fix_m") {
    config.fix_m = parse_int(key, value);
  } else if (key == "fix_n") {
    config.fix_n = parse_int(key, value);
  } else if (key == "range") {
    config.range = parse_range(value);
  } else if (key == "bc") {
    if (value != "open" && value != "cylinder" && value != "torus") {
      throw usage_error("bc must be open, cylinder or torus, got '" + value +
                        "'");
    }
    config.scan_bc = value;
  } else if (key == "mirror") {
    config.mirror = parse_mirror(value);
  } else if (key == "tol") {
    config.tol = parse_double(key, value);
  } else if (key == "threshold") {
    config.threshold = parse_double(key, value);
  } else if (key == "max_displacement") {
    config.max_displacement = parse_int(key, value);
  } else if (key == "max_workers") {
    config.max_workers = parse_int(key, value);
  } else if (key == "dump_hamiltonian") {
    config.dump_hamiltonian = value;
  } else if (key == "output") {
    config.output = value;
  } else if (key == "format") {
    if (value != "csv" && value != "json") {
      throw usage_error("format must be 'csv' or 'json', got '" + value + "'");
    }
    config.format = value;
  } else {
    throw usage_error("unknown config key '" + key + "'");
  }
}

const std::set<std::string>& allowed_keys(const std::string& subcommand) {
  static const std::map<std::string, std::set<std::string>> table = {
      {"spectrum",
       {"M", "N", "bc_x", "bc_y", "gamma", "tol", "dump_hamiltonian", "output",
        "format"}},
      {"return-prob",
       {"M", "N", "bc_x", "bc_y", "gamma", "t_min", "t_max",
        "points_per_decade", "output", "format"}},
      {"evolve",
       {"M", "N", "bc_x", "bc_y", "gamma", "source_x", "source_y", "t_min",
        "t_max", "points_per_decade", "time", "output", "format"}},
      {"limiting",
       {"M", "N", "bc_x", "bc_y", "gamma", "source_x", "source_y", "tol",
        "method", "output", "format"}},
      {"marginal",
       {"M", "N", "bc_x", "bc_y", "gamma", "source_x", "source_y", "tol",
        "method", "axis", "output", "format"}},
      {"scan-asymmetry",
       {"square", "fix_m", "fix_n", "range", "bc", "mirror", "gamma",
        "threshold", "max_workers", "output", "format"}},
      {"continuum-compare",
       {"M", "N", "gamma", "time", "max_displacement", "output", "format"}},
  };
  const auto found = table.find(subcommand);
  if (found == table.end()) {
    throw usage_error("unknown subcommand '" + subcommand + "'");
  }
  return found->second;
}

LatticeSpec lattice_from(const RunConfig& config) {
  if (!config.extent_x || !config.extent_y) {
    throw usage_error("subcommand '" + config.subcommand +
                      "' needs both --M and --N");
  }
  LatticeSpec spec{*config.extent_x, *config.extent_y, config.bc_x,
                   config.bc_y, config.gamma};
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
  return spec;
}

NodeIndex source_from(const RunConfig& config, const LatticeSpec& spec) {
  const NodeIndex source{config.source_x, config.source_y};
  try {
    validate_node(spec, source);
  } catch (const std::out_of_range& e) {
    throw usage_error(e.what());
  }
  return source;
}

Eigen::VectorXd times_from(const RunConfig& config) {
  try {
    return log_time_grid(config.t_min, config.t_max,
                         config.points_per_decade);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
}

Table run_spectrum(const RunConfig& config) {
  const LatticeSpec spec = lattice_from(config);
  if (config.dump_hamiltonian) {
    const Eigen::MatrixXd h = build_hamiltonian(spec);
    std::ostringstream dump;
    dump << "# ctqw spectrum hamiltonian\n";
    for (const auto& [key, value] : config.to_map()) {
      dump << "# " << key << "=" << value << "\n";
    }
    for (int i = 0; i < h.rows(); ++i) {
      for (int j = 0; j < h.cols(); ++j) {
        dump << (j ? "," : "") << format_double(h(i, j));
      }
      dump << "\n";
    }
    write_file(*config.dump_hamiltonian, dump.str());
  }
  const SpectralBasis basis(spec);
  const auto classes = degeneracy_classes(basis, config.tol);
  std::vector<int> class_of(basis.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (int mode : classes[c]) class_of[mode] = static_cast<int>(c);
  }
  const auto modes_x = chain_modes(spec.extent_x, spec.bc_x);
  const auto modes_y = chain_modes(spec.extent_y, spec.bc_y);

  std::vector<int> order(basis.size());
  for (int i = 0; i < basis.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return basis.unit_eigenvalues()[a] < basis.unit_eigenvalues()[b];
  });

  Table table;
  table.columns = {"index",   "m_x",    "m_y",     "theta_x",
                   "theta_y", "lambda", "class_id"};
  for (int mode : order) {
    const Mode& md = basis.modes()[mode];
    table.rows.push_back({cell(mode), cell(md.mx), cell(md.my),
                          cell(modes_x[md.mx].theta), cell(modes_y[md.my].theta),
                          cell(basis.eigenvalues()[mode]),
                          cell(class_of[mode])});
  }
  return table;
}

Table run_return_prob(const RunConfig& config) {
  const LatticeSpec spec = lattice_from(config);
  const SpectralBasis basis(spec);
  const ReturnCurve curve = return_curve(basis, times_from(config));
  Table table;
  table.columns = {"t", "p_classical", "pi_quantum", "mu"};
  for (int i = 0; i < curve.times.size(); ++i) {
    table.rows.push_back({cell(curve.times[i]), cell(curve.classical[i]),
                          cell(curve.quantum[i]), cell(curve.bound[i])});
  }
  return table;
}

Table run_evolve(const RunConfig& config) {
  const LatticeSpec spec = lattice_from(config);
  const SpectralBasis basis(spec);
  const NodeIndex source = source_from(config, spec);
  Eigen::VectorXd times;
  if (config.time) {
    times.resize(1);
    times[0] = *config.time;
  } else {
    times = times_from(config);
  }
  Table table;
  table.columns = {"t", "k_x", "k_y", "p_classical", "pi_quantum"};
  for (int i = 0; i < times.size(); ++i) {
    const Eigen::VectorXd classical =
        classical_probabilities(basis, source, times[i]);
    const AmplitudeField quantum =
        quantum_amplitudes(basis, source, times[i]);
    for (int k = 0; k < spec.num_nodes(); ++k) {
      const NodeIndex node = node_at(spec, k);
      table.rows.push_back({cell(times[i]), cell(node.x), cell(node.y),
                            cell(classical[k]),
                            cell(std::norm(quantum.values[k]))});
    }
  }
  return table;
}

LimitingDistribution limiting_from(const RunConfig& config,
                                   const LatticeSpec& spec,
                                   NodeIndex source) {
  if (config.method == LimitingMethod::ResonanceFactorized) {
    return limiting_distribution_factorized(spec, source, config.tol);
  }
  const SpectralBasis basis(spec);
  return limiting_distribution(basis, source, config.tol);
}

Table run_limiting(const RunConfig& config) {
  const LatticeSpec spec = lattice_from(config);
  const NodeIndex source = source_from(config, spec);
  const LimitingDistribution dist = limiting_from(config, spec, source);
  Table table;
  table.columns = {"k_x", "k_y", "chi"};
  for (int k = 0; k < spec.num_nodes(); ++k) {
    const NodeIndex node = node_at(spec, k);
    table.rows.push_back({cell(node.x), cell(node.y), cell(dist.values[k])});
  }
  return table;
}

Table run_marginal(const RunConfig& config) {
  const LatticeSpec spec = lattice_from(config);
  const NodeIndex source = source_from(config, spec);
  const LimitingDistribution dist = limiting_from(config, spec, source);
  const Eigen::VectorXd sums = marginal(dist, config.axis);
  Table table;
  table.columns = {"index", "chi_sum"};
  for (int i = 0; i < sums.size(); ++i) {
    table.rows.push_back({cell(i + 1), cell(sums[i])});
  }
  return table;
}

Table run_scan(const RunConfig& config) {
  const int selectors = (config.square ? 1 : 0) + (config.fix_m ? 1 : 0) +
                        (config.fix_n ? 1 : 0);
  if (selectors != 1) {
    throw usage_error(
        "scan-asymmetry needs exactly one of --square, --fix-m, --fix-n");
  }
  if (!config.range) {
    throw usage_error("scan-asymmetry needs --range from:to");
  }

  ScanRequest request;
  if (config.scan_bc == "open") {
    request.bc_x = request.bc_y = BoundaryCondition::Open;
  } else if (config.scan_bc == "cylinder") {
    request.bc_x = BoundaryCondition::Periodic;
    request.bc_y = BoundaryCondition::Open;
  } else {
    request.bc_x = request.bc_y = BoundaryCondition::Periodic;
  }
  request.mirror = config.mirror.value_or(config.scan_bc == "cylinder"
                                              ? MirrorKind::Axial
                                              : MirrorKind::OppositeCorner);
  if (config.square) {
    request.vary = ScanRequest::Vary::Both;
  } else if (config.fix_m) {
    request.vary = ScanRequest::Vary::Y;
    request.fixed_extent = *config.fix_m;
  } else {
    request.vary = ScanRequest::Vary::X;
    request.fixed_extent = *config.fix_n;
  }
  request.from = config.range->first;
  request.to = config.range->second;
  request.gamma = config.gamma;
  request.threshold = config.threshold;
  request.max_workers = config.max_workers;

  std::vector<AsymmetryScanRow> rows;
  try {
    rows = asymmetry_scan(request);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }

  Table table;
  table.columns = {"M", "N", "bc", "mirror", "delta", "is_asymmetric"};
  for (const auto& row : rows) {
    table.rows.push_back({cell(row.extent_x), cell(row.extent_y),
                          cell(config.scan_bc), cell(to_string(row.mirror)),
                          cell(row.delta),
                          cell(static_cast<long long>(row.asymmetric))});
  }
  return table;
}

Table run_continuum_compare(const RunConfig& config) {
  const int m = config.extent_x.value_or(101);
  const int n = config.extent_y.value_or(101);
  if (m % 2 == 0 || n % 2 == 0) {
    throw usage_error(
        "continuum-compare needs odd extents so the source sits at the "
        "centre");
  }
  LatticeSpec spec = make_torus(m, n, config.gamma);
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
  const double t = config.time.value_or(5.0);
  const double scaled_time = spec.gamma * t;
  const int max_d = config.max_displacement;
  if (max_d < 0) throw usage_error("max displacement must be >= 0");
  if (!continuum_comparison_valid(max_d, scaled_time, std::min(m, n))) {
    std::ostringstream msg;
    msg << "displacement window " << max_d << " at time " << scaled_time
        << " reaches the wrap-around of the " << m << "x" << n
        << " torus (need 2t + |d| < extent/2 - 2)";
    throw usage_error(msg.str());
  }

  const SpectralBasis basis(spec);
  const NodeIndex centre{(m + 1) / 2, (n + 1) / 2};
  const AmplitudeField field = quantum_amplitudes(basis, centre, t);

  Table table;
  table.columns = {"t", "dx", "dy", "pi_finite", "pi_continuum", "abs_diff"};
  for (int dx = -max_d; dx <= max_d; ++dx) {
    for (int dy = -max_d; dy <= max_d; ++dy) {
      const NodeIndex node{centre.x + dx, centre.y + dy};
      const double finite =
          std::norm(field.values[flat_index(spec, node)]);
      const double continuum = continuum_probability(dx, dy, scaled_time);
      table.rows.push_back({cell(t), cell(dx), cell(dy), cell(finite),
                            cell(continuum),
                            cell(std::abs(finite - continuum))});
    }
  }
  return table;
}

std::string render_csv(const RunConfig& config, const Table& table) {
  std::ostringstream out;
  out << "# ctqw " << config.subcommand << "\n";
  for (const auto& [key, value] : config.to_map()) {
    out << "# " << key << "=" << value << "\n";
  }
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << table.columns[c];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? "," : "") << format_cell(row[c]);
    }
    out << "\n";
  }
  return out.str();
}

std::string render_json(const RunConfig& config, const Table& table) {
  nlohmann::ordered_json doc;
  doc["tool"] = "ctqw";
  doc["subcommand"] = config.subcommand;
  nlohmann::ordered_json cfg;
  cfg["subcommand"] = config.subcommand;
  for (const auto& [key, value] : config.to_map()) cfg[key] = value;
  doc["config"] = cfg;
  doc["columns"] = table.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json json_row = nlohmann::ordered_json::array();
    for (const auto& value : row) {
      if (const auto* i = std::get_if<long long>(&value)) {
        json_row.push_back(*i);
      } else if (const auto* d = std::get_if<double>(&value)) {
        json_row.push_back(*d);
      } else {
        json_row.push_back(std::get<std::string>(value));
      }
    }
    rows.push_back(std::move(json_row));
  }
  doc["rows"] = rows;
  return doc.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& payload) {
  if (path == "-") {
    std::cout << payload;
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw usage_error("cannot open output path '" + path + "'");
  }
  file << payload;
  if (!file.good()) {
    throw usage_error("failed writing output path '" + path + "'");
  }
}

void write_output(const RunConfig& config, const std::string& payload) {
  write_file(config.output, payload);
}

}  // namespace

std::map<std::string, std::string> RunConfig::to_map() const {
  std::map<std::string, std::string> map;
  const auto& keys = allowed_keys(subcommand);
  auto put = [&](const std::string& key, const std::string& value) {
    if (keys.count(key)) map[key] = value;
  };

  if (subcommand == "continuum-compare") {
    put("M", std::to_string(extent_x.value_or(101)));
    put("N", std::to_string(extent_y.value_or(101)));
    put("time", format_double(time.value_or(5.0)));
  } else {
    if (extent_x) put("M", std::to_string(*extent_x));
    if (extent_y) put("N", std::to_string(*extent_y));
    if (time) put("time", format_double(*time));
  }
  put("bc_x", to_string(bc_x));
  put("bc_y", to_string(bc_y));
  put("gamma", format_double(gamma));
  put("source_x", std::to_string(source_x));
  put("source_y", std::to_string(source_y));
  put("t_min", format_double(t_min));
  put("t_max", format_double(t_max));
  put("points_per_decade", std::to_string(points_per_decade));
  put("axis", axis == Axis::X ? "x" : "y");
  put("method", method == LimitingMethod::ResonanceFactorized ? "factorized"
                                                              : "eigenclass");
  if (square) put("square", "true");
  if (fix_m) put("fix_m", std::to_string(*fix_m));
  if (fix_n) put("fix_n", std::to_string(*fix_n));
  if (range) {
    put("range", std::to_string(range->first) + ":" +
                     std::to_string(range->second));
  }
  put("bc", scan_bc);
  if (subcommand == "scan-asymmetry") {
    const MirrorKind effective = mirror.value_or(
        scan_bc == "cylinder" ? MirrorKind::Axial : MirrorKind::OppositeCorner);
    put("mirror", to_string(effective));
  }
  put("tol", format_double(tol));
  put("threshold", format_double(threshold));
  put("max_displacement", std::to_string(max_displacement));
  put("max_workers", std::to_string(max_workers));
  if (dump_hamiltonian) put("dump_hamiltonian", *dump_hamiltonian);
  put("output", output);
  put("format", format);
  return map;
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> values;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw usage_error(std::string("config JSON parse failure: ") + e.what());
    }
    if (!doc.contains("config") || !doc["config"].is_object()) {
      throw usage_error("config JSON has no 'config' object");
    }
    for (const auto& [key, value] : doc["config"].items()) {
      values[key] = value.is_string() ? value.get<std::string>() : value.dump();
    }
    return values;
  }

  std::istringstream stream(text);
  std::string line;
  int line_number = 0;
  auto trim = [](std::string s) {
    const auto begin = s.find_first_not_of(" \t\r");
    const auto end = s.find_last_not_of(" \t\r");
    return begin == std::string::npos ? std::string()
                                      : s.substr(begin, end - begin + 1);
  };
  while (std::getline(stream, line)) {
    ++line_number;
    const std::string trimmed = trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw usage_error("config line " + std::to_string(line_number) +
                        " is not key=value: '" + trimmed + "'");
    }
    values[trim(trimmed.substr(0, eq))] = trim(trimmed.substr(eq + 1));
  }
  return values;
}

RunConfig make_run_config(
    const std::string& subcommand,
    const std::map<std::string, std::string>& file_values,
    const std::map<std::string, std::string>& cli_values) {
  RunConfig config;
  config.subcommand = subcommand;
  const auto& keys = allowed_keys(subcommand);
  for (const auto* source : {&file_values, &cli_values}) {
    for (const auto& [key, value] : *source) {
      if (key != "subcommand" && !keys.count(key)) {
        throw usage_error("key '" + key + "' does not apply to subcommand '" +
                          subcommand + "'");
      }
      apply_value(config, key, value);
    }
  }

  if (!(config.gamma > 0.0)) throw usage_error("gamma must be positive");
  if (!(config.tol > 0.0)) throw usage_error("tol must be positive");
  if (!(config.threshold > 0.0)) {
    throw usage_error("threshold must be positive");
  }
  if (config.points_per_decade < 1) {
    throw usage_error("points_per_decade must be >= 1");
  }
  if (config.time && !(*config.time >= 0.0)) {
    throw usage_error("time must be >= 0");
  }
  if (config.max_workers < 0) {
    throw usage_error("max_workers must be >= 0");
  }
  return config;
}

int run(const RunConfig& config) {
  try {
    Table table;
    if (config.subcommand == "spectrum") {
      table = run_spectrum(config);
    } else if (config.subcommand == "return-prob") {
      table = run_return_prob(config);
    } else if (config.subcommand == "evolve") {
      table = run_evolve(config);
    } else if (config.subcommand == "limiting") {
      table = run_limiting(config);
    } else if (config.subcommand == "marginal") {
      table = run_marginal(config);
    } else if (config.subcommand == "scan-asymmetry") {
      table = run_scan(config);
    } else if (config.subcommand == "continuum-compare") {
      table = run_continuum_compare(config);
    } else {
      throw usage_error("unknown subcommand '" + config.subcommand + "'");
    }
    write_output(config, config.format == "json" ? render_json(config, table)
                                                 : render_csv(config, table));
    return 0;
  } catch (const numerical_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 2;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ctqw

#include "ctqw/lattice.hpp"

#include <stdexcept>

namespace ctqw {

std::string to_string(BoundaryCondition bc) {
  return bc == BoundaryCondition::Periodic ? "periodic" : "open";
}

BoundaryCondition parse_boundary_condition(const std::string& text) {
  if (text == "periodic" || text == "p") return BoundaryCondition::Periodic;
  if (text == "open" || text == "o") return BoundaryCondition::Open;
  throw std::invalid_argument("unknown boundary condition '" + text +
                              "' (expected 'periodic' or 'open')");
}

void validate_extent(int extent, BoundaryCondition bc) {
  if (extent < 2) {
    throw std::invalid_argument("lattice extent must be >= 2, got " +
                                std::to_string(extent));
  }
  if (bc == BoundaryCondition::Periodic && extent < 3) {
    throw std::invalid_argument(
        "periodic axis needs extent >= 3, got " + std::to_string(extent) +
        " (extent 2 would require a double bond)");
  }
}

void LatticeSpec::validate() const {
  validate_extent(extent_x, bc_x);
  validate_extent(extent_y, bc_y);
  if (!(gamma > 0.0)) {
    throw std::invalid_argument("transmission rate gamma must be positive");
  }
}

LatticeSpec make_torus(int m, int n, double gamma) {
  return {m, n, BoundaryCondition::Periodic, BoundaryCondition::Periodic,
          gamma};
}

LatticeSpec make_cylinder(int m, int n, double gamma) {
  return {m, n, BoundaryCondition::Periodic, BoundaryCondition::Open, gamma};
}

LatticeSpec make_rectangle(int m, int n, double gamma) {
  return {m, n, BoundaryCondition::Open, BoundaryCondition::Open, gamma};
}

void validate_node(const LatticeSpec& spec, NodeIndex node) {
  if (node.x < 1 || node.x > spec.extent_x || node.y < 1 ||
      node.y > spec.extent_y) {
    throw std::out_of_range("node (" + std::to_string(node.x) + "," +
                            std::to_string(node.y) + ") outside " +
                            std::to_string(spec.extent_x) + "x" +
                            std::to_string(spec.extent_y) + " lattice");
  }
}

int flat_index(const LatticeSpec& spec, NodeIndex node) {
  validate_node(spec, node);
  return (node.x - 1) * spec.extent_y + (node.y - 1);
}

NodeIndex node_at(const LatticeSpec& spec, int flat) {
  if (flat < 0 || flat >= spec.num_nodes()) {
    throw std::out_of_range("flat index " + std::to_string(flat) +
                            " outside [0, " +
                            std::to_string(spec.num_nodes()) + ")");
  }
  return {flat / spec.extent_y + 1, flat % spec.extent_y + 1};
}

namespace {

// Neighbours along one axis; open ends drop the out-of-range side.
int axis_bond_count(int coord, int extent, BoundaryCondition bc) {
  if (bc == BoundaryCondition::Periodic) return 2;
  return (coord > 1 ? 1 : 0) + (coord < extent ? 1 : 0);
}

}  // namespace

int functionality(const LatticeSpec& spec, NodeIndex node) {
  spec.validate();
  validate_node(spec, node);
  return axis_bond_count(node.x, spec.extent_x, spec.bc_x) +
         axis_bond_count(node.y, spec.extent_y, spec.bc_y);
}

Eigen::MatrixXd build_hamiltonian(const LatticeSpec& spec) {
  spec.validate();
  const int n_nodes = spec.num_nodes();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n_nodes, n_nodes);

  auto connect = [&](int from, NodeIndex to) {
    h(from, flat_index(spec, to)) -= spec.gamma;
    h(from, from) += spec.gamma;
  };

  for (int flat = 0; flat < n_nodes; ++flat) {
    const NodeIndex node = node_at(spec, flat);
    if (spec.bc_x == BoundaryCondition::Periodic) {
      connect(flat, {node.x % spec.extent_x + 1, node.y});
      connect(flat, {(node.x + spec.extent_x - 2) % spec.extent_x + 1, node.y});
    } else {
      if (node.x < spec.extent_x) connect(flat, {node.x + 1, node.y});
      if (node.x > 1) connect(flat, {node.x - 1, node.y});
    }
    if (spec.bc_y == BoundaryCondition::Periodic) {
      connect(flat, {node.x, node.y % spec.extent_y + 1});
      connect(flat, {node.x, (node.y + spec.extent_y - 2) % spec.extent_y + 1});
    } else {
      if (node.y < spec.extent_y) connect(flat, {node.x, node.y + 1});
      if (node.y > 1) connect(flat, {node.x, node.y - 1});
    }
  }
  return h;
}

}  // namespace ctqw

#pragma once

#include <Eigen/Dense>
#include <string>

namespace ctqw {

enum class BoundaryCondition { Periodic, Open };

std::string to_string(BoundaryCondition bc);
BoundaryCondition parse_boundary_condition(const std::string& text);

// Throws std::invalid_argument unless extent >= 2 (>= 3 on periodic axes;
// extent 2 with wrap-around would need a double bond, which is rejected
// rather than reinterpreted).
void validate_extent(int extent, BoundaryCondition bc);

// Problem definition: an M x N lattice of identical bonds with per-axis
// boundary conditions and transmission rate gamma (units 1/time).
struct LatticeSpec {
  int extent_x = 2;  // M
  int extent_y = 2;  // N
  BoundaryCondition bc_x = BoundaryCondition::Open;
  BoundaryCondition bc_y = BoundaryCondition::Open;
  double gamma = 1.0;

  int num_nodes() const { return extent_x * extent_y; }
  void validate() const;
};

LatticeSpec make_torus(int m, int n, double gamma = 1.0);
LatticeSpec make_cylinder(int m, int n, double gamma = 1.0);  // periodic in x
LatticeSpec make_rectangle(int m, int n, double gamma = 1.0);

// 1-based lattice coordinates, x in [1, M], y in [1, N].
struct NodeIndex {
  int x = 1;
  int y = 1;

  friend bool operator==(NodeIndex a, NodeIndex b) {
    return a.x == b.x && a.y == b.y;
  }
};

void validate_node(const LatticeSpec& spec, NodeIndex node);

// Row-major flat index (x - 1) * N + (y - 1); the inverse of node_at.
int flat_index(const LatticeSpec& spec, NodeIndex node);
NodeIndex node_at(const LatticeSpec& spec, int flat);

// Number of bonds attached to the node; equals the Hamiltonian diagonal
// divided by gamma.
int functionality(const LatticeSpec& spec, NodeIndex node);

// Dense H = gamma * A with A the graph Laplacian of the lattice: symmetric,
// zero row sums, non-negative definite with a single zero eigenvalue.
Eigen::MatrixXd build_hamiltonian(const LatticeSpec& spec);

}  // namespace ctqw

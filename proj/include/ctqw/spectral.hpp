#pragma once

#include <Eigen/Dense>
#include <complex>
#include <mutex>
#include <utility>
#include <vector>

#include "ctqw/lattice.hpp"

namespace ctqw {

// Default absolute tolerance for treating two eigenvalues as degenerate.
// Analytically equal cosine sums agree to machine precision, while distinct
// ones on desk-scale lattices are separated by far more than 1e-8.
inline constexpr double kDegeneracyTol = 1e-9;

// One chain eigenpair: Bloch wave (periodic) or standing wave (open).
struct ChainMode {
  int index = 0;            // m in [0, extent)
  double theta = 0.0;       // 2*pi*m/extent (periodic) or pi*m/extent (open)
  double eigenvalue = 0.0;  // 2 - 2 cos(theta)
  BoundaryCondition bc = BoundaryCondition::Open;
  int extent = 0;
};

std::vector<ChainMode> chain_modes(int extent, BoundaryCondition bc,
                                   bool sort_by_eigenvalue = false);

// Component <site|mode>, site 1-based. Periodic: exp(-i theta j) / sqrt(M).
// Open: the path-graph standing wave, proportional to cos(theta (j - 1/2)).
std::complex<double> chain_eigenvector(const ChainMode& mode, int site);

// Row m = chain eigenvector m over sites 1..extent. Rows are orthonormal and
// diagonalize the chain Laplacian; verified against the numerical solver at
// build time.
Eigen::MatrixXcd chain_eigenvector_matrix(int extent, BoundaryCondition bc);

// Separable eigenpair of the two-dimensional Hamiltonian at gamma = 1.
struct Mode {
  int mx = 0;
  int my = 0;
  double eigenvalue = 0.0;  // lambda_x + lambda_y, in [0, 8)
};

// Partition of indices into equivalence classes under |a - b| < tol
// (transitive closure), ordered by class value. Throws numerical_error when
// the clustering is ambiguous: a within-class spread >= tol or an
// inter-class gap below 10 * tol.
std::vector<std::vector<int>> cluster_values(const Eigen::VectorXd& values,
                                             double tol);

// Complete eigen-decomposition of the lattice Hamiltonian as tensor products
// of chain modes. Immutable after construction; safe to share across threads.
class SpectralBasis {
 public:
  explicit SpectralBasis(const LatticeSpec& spec);

  const LatticeSpec& spec() const { return spec_; }
  int size() const { return static_cast<int>(modes_.size()); }

  // Lexicographic in (mx, my); mode (mx, my) has index mx * N + my.
  const std::vector<Mode>& modes() const { return modes_; }

  // Hamiltonian eigenvalues gamma * (lambda_x + lambda_y), mode order.
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

  // Eigenvalues at gamma = 1; the degeneracy structure is gamma-independent.
  const Eigen::VectorXd& unit_eigenvalues() const { return unit_eigenvalues_; }

  // <node|q_n> for mode n.
  std::complex<double> eigenvector(int mode, NodeIndex node) const;

  // Per-axis eigenvector matrices, row m over sites 1..extent.
  const Eigen::MatrixXcd& axis_modes_x() const { return axis_x_; }
  const Eigen::MatrixXcd& axis_modes_y() const { return axis_y_; }
  const Eigen::VectorXd& axis_eigenvalues_x() const { return axis_lambda_x_; }
  const Eigen::VectorXd& axis_eigenvalues_y() const { return axis_lambda_y_; }

  // Degeneracy classes at the default tolerance, built on first use.
  const std::vector<std::vector<int>>& classes() const;

 private:
  LatticeSpec spec_;
  std::vector<Mode> modes_;
  Eigen::VectorXd unit_eigenvalues_;
  Eigen::VectorXd eigenvalues_;
  Eigen::VectorXd axis_lambda_x_;
  Eigen::VectorXd axis_lambda_y_;
  Eigen::MatrixXcd axis_x_;
  Eigen::MatrixXcd axis_y_;

  mutable std::once_flag classes_once_;
  mutable std::vector<std::vector<int>> classes_;
};

SpectralBasis build_basis(const LatticeSpec& spec);

std::vector<std::vector<int>> degeneracy_classes(const SpectralBasis& basis,
                                                 double tol = kDegeneracyTol);

// Dense symmetric eigensolver used as the cross-validation oracle for the
// analytic basis. Eigenvalues ascending, eigenvectors in columns.
std::pair<Eigen::VectorXd, Eigen::MatrixXd> numerical_diagonalize(
    const Eigen::MatrixXd& hamiltonian);

}  // namespace ctqw

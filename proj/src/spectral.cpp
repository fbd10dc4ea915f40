#include "ctqw/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ctqw/errors.hpp"

namespace ctqw {

namespace {

constexpr double kBuildResidualTol = 1e-10;

Eigen::MatrixXd chain_laplacian(int extent, BoundaryCondition bc) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(extent, extent);
  for (int j = 0; j < extent; ++j) {
    if (bc == BoundaryCondition::Periodic) {
      h(j, j) = 2.0;
      h(j, (j + 1) % extent) -= 1.0;
      h(j, (j + extent - 1) % extent) -= 1.0;
    } else {
      if (j + 1 < extent) {
        h(j, j) += 1.0;
        h(j, j + 1) -= 1.0;
      }
      if (j > 0) {
        h(j, j) += 1.0;
        h(j, j - 1) -= 1.0;
      }
    }
  }
  return h;
}

}  // namespace

std::vector<ChainMode> chain_modes(int extent, BoundaryCondition bc,
                                   bool sort_by_eigenvalue) {
  validate_extent(extent, bc);
  const double step = (bc == BoundaryCondition::Periodic ? 2.0 : 1.0) *
                      std::numbers::pi / extent;
  std::vector<ChainMode> modes;
  modes.reserve(extent);
  for (int m = 0; m < extent; ++m) {
    const double theta = step * m;
    modes.push_back({m, theta, 2.0 - 2.0 * std::cos(theta), bc, extent});
  }
  if (sort_by_eigenvalue) {
    std::stable_sort(modes.begin(), modes.end(),
                     [](const ChainMode& a, const ChainMode& b) {
                       return a.eigenvalue < b.eigenvalue;
                     });
  }
  return modes;
}

std::complex<double> chain_eigenvector(const ChainMode& mode, int site) {
  if (site < 1 || site > mode.extent) {
    throw std::out_of_range("chain site " + std::to_string(site) +
                            " outside [1, " + std::to_string(mode.extent) +
                            "]");
  }
  const double norm = 1.0 / std::sqrt(static_cast<double>(mode.extent));
  if (mode.bc == BoundaryCondition::Periodic) {
    return std::polar(norm, -mode.theta * site);
  }
  if (mode.index == 0) return norm;
  return std::numbers::sqrt2 * norm * std::cos(mode.theta * (site - 0.5));
}

Eigen::MatrixXcd chain_eigenvector_matrix(int extent, BoundaryCondition bc) {
  const auto modes = chain_modes(extent, bc);
  Eigen::MatrixXcd mat(extent, extent);
  for (int m = 0; m < extent; ++m) {
    for (int j = 1; j <= extent; ++j) {
      mat(m, j - 1) = chain_eigenvector(modes[m], j);
    }
  }
  return mat;
}

std::vector<std::vector<int>> cluster_values(const Eigen::VectorXd& values,
                                             double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("cluster tolerance must be > 0");
  const int n = static_cast<int>(values.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return values[a] < values[b]; });

  std::vector<std::vector<int>> classes;
  for (int pos = 0; pos < n; ++pos) {
    if (pos == 0 ||
        values[order[pos]] - values[order[pos - 1]] >= tol) {
      classes.emplace_back();
    }
    classes.back().push_back(order[pos]);
  }

  for (std::size_t c = 0; c < classes.size(); ++c) {
    const double spread =
        values[classes[c].back()] - values[classes[c].front()];
    if (spread >= tol) {
      std::ostringstream msg;
      msg << "ambiguous clustering: chained class spread " << spread
          << " >= tol " << tol;
      throw numerical_error(msg.str());
    }
    if (c > 0) {
      const double gap =
          values[classes[c].front()] - values[classes[c - 1].back()];
      if (gap < 10.0 * tol) {
        std::ostringstream msg;
        msg << "ambiguous clustering: inter-class gap " << gap << " < 10*tol "
            << 10.0 * tol;
        throw numerical_error(msg.str());
      }
    }
  }
  return classes;
}

SpectralBasis::SpectralBasis(const LatticeSpec& spec) : spec_(spec) {
  spec_.validate();
  const int m = spec_.extent_x;
  const int n = spec_.extent_y;

  const auto modes_x = chain_modes(m, spec_.bc_x);
  const auto modes_y = chain_modes(n, spec_.bc_y);
  axis_x_ = chain_eigenvector_matrix(m, spec_.bc_x);
  axis_y_ = chain_eigenvector_matrix(n, spec_.bc_y);
  axis_lambda_x_.resize(m);
  for (int i = 0; i < m; ++i) axis_lambda_x_[i] = modes_x[i].eigenvalue;
  axis_lambda_y_.resize(n);
  for (int i = 0; i < n; ++i) axis_lambda_y_[i] = modes_y[i].eigenvalue;

  // The tensor-product construction is exact once each chain family
  // diagonalizes its own Laplacian; check the per-axis residuals here.
  for (const auto& [mat, lambda, bc, extent] :
       {std::tuple{&axis_x_, &axis_lambda_x_, spec_.bc_x, m},
        std::tuple{&axis_y_, &axis_lambda_y_, spec_.bc_y, n}}) {
    const Eigen::MatrixXcd h =
        chain_laplacian(extent, bc).cast<std::complex<double>>();
    const Eigen::MatrixXcd mismatch =
        (*mat) * h - lambda->cast<std::complex<double>>().asDiagonal() * (*mat);
    const double residual = mismatch.cwiseAbs().maxCoeff();
    if (residual > kBuildResidualTol) {
      std::ostringstream msg;
      msg << "chain eigenvector residual " << residual << " exceeds "
          << kBuildResidualTol;
      throw numerical_error(msg.str());
    }
  }

  modes_.reserve(static_cast<std::size_t>(m) * n);
  unit_eigenvalues_.resize(m * n);
  for (int mx = 0; mx < m; ++mx) {
    for (int my = 0; my < n; ++my) {
      const double lambda = axis_lambda_x_[mx] + axis_lambda_y_[my];
      modes_.push_back({mx, my, lambda});
      unit_eigenvalues_[mx * n + my] = lambda;
    }
  }
  eigenvalues_ = spec_.gamma * unit_eigenvalues_;
}

std::complex<double> SpectralBasis::eigenvector(int mode,
                                                NodeIndex node) const {
  if (mode < 0 || mode >= size()) {
    throw std::out_of_range("mode index " + std::to_string(mode) +
                            " outside [0, " + std::to_string(size()) + ")");
  }
  validate_node(spec_, node);
  const Mode& md = modes_[mode];
  return axis_x_(md.mx, node.x - 1) * axis_y_(md.my, node.y - 1);
}

const std::vector<std::vector<int>>& SpectralBasis::classes() const {
  std::call_once(classes_once_, [this] {
    classes_ = cluster_values(unit_eigenvalues_, kDegeneracyTol);
  });
  return classes_;
}

SpectralBasis build_basis(const LatticeSpec& spec) {
  return SpectralBasis(spec);
}

std::vector<std::vector<int>> degeneracy_classes(const SpectralBasis& basis,
                                                 double tol) {
  return cluster_values(basis.unit_eigenvalues(), tol);
}

std::pair<Eigen::VectorXd, Eigen::MatrixXd> numerical_diagonalize(
    const Eigen::MatrixXd& hamiltonian) {
  if (hamiltonian.rows() != hamiltonian.cols()) {
    throw std::invalid_argument("matrix must be square");
  }
  const double scale = std::max(1.0, hamiltonian.cwiseAbs().maxCoeff());
  if ((hamiltonian - hamiltonian.transpose()).cwiseAbs().maxCoeff() >
      1e-12 * scale) {
    throw std::invalid_argument("matrix must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian);
  if (solver.info() != Eigen::Success) {
    throw numerical_error("dense symmetric eigensolver failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace ctqw

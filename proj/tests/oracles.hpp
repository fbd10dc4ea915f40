// Test-side reference computations, independent of the spectral evolution
// paths they validate.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>
#include <vector>

#include "ctqw/dynamics.hpp"
#include "ctqw/lattice.hpp"
#include "ctqw/spectral.hpp"

namespace ctqw::testing {

// exp(-iHt)|j> by dense matrix exponential (scaling-and-squaring).
inline Eigen::VectorXcd unitary_evolution_oracle(const Eigen::MatrixXd& h,
                                                 int source_flat, double t) {
  const std::complex<double> minus_i{0.0, -1.0};
  const Eigen::MatrixXcd propagator =
      (minus_i * t * h.cast<std::complex<double>>()).exp();
  return propagator.col(source_flat);
}

// exp(Tt)|j>, T = -H, by dense matrix exponential.
inline Eigen::VectorXd classical_evolution_oracle(const Eigen::MatrixXd& h,
                                                  int source_flat, double t) {
  const Eigen::MatrixXd propagator = (-t * h).exp();
  return propagator.col(source_flat);
}

// Power series for J_n(x), n >= 0; reliable for small arguments.
inline double bessel_series_oracle(int n, double x) {
  const double half = 0.5 * x;
  double prefactor = 1.0;
  for (int i = 1; i <= n; ++i) prefactor *= half / i;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= 80; ++k) {
    term *= -(half * half) / (static_cast<double>(k) * (n + k));
    sum += term;
    if (std::abs(term) < 1e-19 * std::abs(sum)) break;
  }
  return prefactor * sum;
}

// (1/T) integral of pi_{k,j}(t) dt over [0, T] by the trapezoid rule; the
// time averaging is direct, only the integrand reuses the spectral
// amplitudes.
inline Eigen::VectorXd time_average_oracle(const SpectralBasis& basis,
                                           NodeIndex source, double horizon,
                                           double step) {
  const int m = basis.spec().extent_x;
  const int n = basis.spec().extent_y;
  const double gamma = basis.spec().gamma;
  const Eigen::MatrixXcd& x = basis.axis_modes_x();
  const Eigen::MatrixXcd& y = basis.axis_modes_y();
  const Eigen::VectorXcd cx = x.col(source.x - 1).conjugate();
  const Eigen::VectorXcd cy = y.col(source.y - 1).conjugate();
  const Eigen::VectorXd& lx = basis.axis_eigenvalues_x();
  const Eigen::VectorXd& ly = basis.axis_eigenvalues_y();

  const auto steps = static_cast<std::int64_t>(std::llround(horizon / step));
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(m, n);
  Eigen::VectorXcd wx(m), wy(n);
  const std::complex<double> minus_i{0.0, -1.0};
  for (std::int64_t i = 0; i <= steps; ++i) {
    const double t = step * static_cast<double>(i);
    for (int a = 0; a < m; ++a) {
      wx[a] = std::exp(minus_i * (gamma * lx[a] * t)) * cx[a];
    }
    for (int b = 0; b < n; ++b) {
      wy[b] = std::exp(minus_i * (gamma * ly[b] * t)) * cy[b];
    }
    const Eigen::VectorXd px = (x.transpose() * wx).cwiseAbs2();
    const Eigen::VectorXd py = (y.transpose() * wy).cwiseAbs2();
    const double weight = (i == 0 || i == steps) ? 0.5 : 1.0;
    acc.noalias() += weight * (px * py.transpose());
  }
  acc *= step / horizon;
  Eigen::VectorXd flat(acc.size());
  Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                           Eigen::RowMajor>>(flat.data(), m, n) = acc;
  return flat;
}

// Screens every chain-mode quadruple for a vanishing total eigenvalue
// difference.
inline std::size_t brute_force_quadruple_count(const LatticeSpec& spec,
                                               double tol) {
  const auto mx = chain_modes(spec.extent_x, spec.bc_x);
  const auto my = chain_modes(spec.extent_y, spec.bc_y);
  std::size_t count = 0;
  for (const auto& a : mx) {
    for (const auto& b : mx) {
      const double dx = a.eigenvalue - b.eigenvalue;
      for (const auto& c : my) {
        for (const auto& d : my) {
          if (std::abs(dx + c.eigenvalue - d.eigenvalue) < tol) ++count;
        }
      }
    }
  }
  return count;
}

// Random valid lattice spec with at most max_nodes nodes.
inline LatticeSpec random_spec(std::mt19937& rng, int max_nodes = 100,
                               bool random_gamma = true) {
  std::uniform_int_distribution<int> bc_pick(0, 1);
  std::uniform_real_distribution<double> gamma_pick(0.5, 2.0);
  for (;;) {
    LatticeSpec spec;
    spec.bc_x = bc_pick(rng) ? BoundaryCondition::Periodic
                             : BoundaryCondition::Open;
    spec.bc_y = bc_pick(rng) ? BoundaryCondition::Periodic
                             : BoundaryCondition::Open;
    const int min_x = spec.bc_x == BoundaryCondition::Periodic ? 3 : 2;
    const int min_y = spec.bc_y == BoundaryCondition::Periodic ? 3 : 2;
    std::uniform_int_distribution<int> mx(min_x, 10);
    std::uniform_int_distribution<int> my(min_y, 10);
    spec.extent_x = mx(rng);
    spec.extent_y = my(rng);
    spec.gamma = random_gamma ? gamma_pick(rng) : 1.0;
    if (spec.num_nodes() <= max_nodes) return spec;
  }
}

inline NodeIndex random_node(std::mt19937& rng, const LatticeSpec& spec) {
  std::uniform_int_distribution<int> x(1, spec.extent_x);
  std::uniform_int_distribution<int> y(1, spec.extent_y);
  return {x(rng), y(rng)};
}

}  // namespace ctqw::testing

#pragma once

#include <Eigen/Dense>
#include <complex>

#include "ctqw/lattice.hpp"
#include "ctqw/spectral.hpp"

namespace ctqw {

// Quantum transition amplitudes <k|exp(-iHt)|j> over all nodes k for one
// source j; unit norm at every time.
struct AmplitudeField {
  NodeIndex source;
  double time = 0.0;
  Eigen::VectorXcd values;  // flat node order
};

AmplitudeField quantum_amplitudes(const SpectralBasis& basis, NodeIndex source,
                                  double t);

// Classical master-equation probabilities <k|exp(Tt)|j>, T = -H. Entries in
// [-1e-12, 0) are rounded to zero; anything below that is a numerical_error.
Eigen::VectorXd classical_probabilities(const SpectralBasis& basis,
                                        NodeIndex source, double t);

// Transition amplitudes of a single chain, all sites for one source site.
Eigen::VectorXcd chain_amplitudes(int extent, BoundaryCondition bc,
                                  double gamma, int source, double t);

// Site-averaged classical return probability; depends on eigenvalues only.
double classical_avg_return(const Eigen::VectorXd& eigenvalues, double t);

// Site-averaged quantum return probability (needs the eigenvectors).
double quantum_avg_return(const SpectralBasis& basis, double t);

// Cauchy-Schwarz lower bound on the quantum average return probability;
// eigenvalues only, and exact under periodic boundaries in both directions.
double lower_bound_mu(const Eigen::VectorXd& eigenvalues, double t);

struct ReturnCurve {
  Eigen::VectorXd times;
  Eigen::VectorXd classical;  // p-bar
  Eigen::VectorXd quantum;    // pi-bar
  Eigen::VectorXd bound;      // mu
};

ReturnCurve return_curve(const SpectralBasis& basis,
                         const Eigen::VectorXd& times);

// Logarithmic grid with a fixed point density per decade, endpoints included.
Eigen::VectorXd log_time_grid(double t_min, double t_max,
                              int points_per_decade);

// Logarithmic grid with a fixed total point count, endpoints included.
Eigen::VectorXd log_spaced_times(double t_min, double t_max, int count);

}  // namespace ctqw

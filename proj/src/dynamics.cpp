#include "ctqw/dynamics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ctqw/errors.hpp"

namespace ctqw {

namespace {

using Complex = std::complex<double>;
constexpr Complex kImagUnit{0.0, 1.0};
constexpr double kNegativeProbabilityTol = 1e-12;

void validate_time(double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("time must be >= 0");
}

// Spectral sum over all N = M*N modes arranged as an M x N coefficient
// matrix: field(k) = sum_n w_n <k|q_n>, evaluated as X^T C Y with
// C(mx, my) = w(mx,my) * conj(X(mx, jx)) * conj(Y(my, jy)).
Eigen::MatrixXcd mode_sum_field(const SpectralBasis& basis, NodeIndex source,
                                const Eigen::MatrixXcd& weights) {
  const Eigen::MatrixXcd& x = basis.axis_modes_x();
  const Eigen::MatrixXcd& y = basis.axis_modes_y();
  const Eigen::MatrixXcd coeff =
      weights.array() * (x.col(source.x - 1).conjugate() *
                         y.col(source.y - 1).conjugate().transpose())
                            .array();
  return x.transpose() * coeff * y;
}

// exp(scale * lambda_n) over modes, shaped M x N in mode order.
Eigen::MatrixXcd mode_weights(const SpectralBasis& basis, Complex scale) {
  const int m = basis.spec().extent_x;
  const int n = basis.spec().extent_y;
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      lambda(basis.eigenvalues().data(), m, n);
  return (scale * lambda.cast<Complex>().array()).exp();
}

Eigen::VectorXcd flatten_row_major(const Eigen::MatrixXcd& field) {
  Eigen::VectorXcd flat(field.size());
  Eigen::Map<Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                           Eigen::RowMajor>>(flat.data(), field.rows(),
                                             field.cols()) = field;
  return flat;
}

}  // namespace

AmplitudeField quantum_amplitudes(const SpectralBasis& basis, NodeIndex source,
                                  double t) {
  validate_node(basis.spec(), source);
  validate_time(t);
  const Eigen::MatrixXcd field =
      mode_sum_field(basis, source, mode_weights(basis, -kImagUnit * t));
  return {source, t, flatten_row_major(field)};
}

Eigen::VectorXd classical_probabilities(const SpectralBasis& basis,
                                        NodeIndex source, double t) {
  validate_node(basis.spec(), source);
  validate_time(t);
  const Eigen::MatrixXcd field =
      mode_sum_field(basis, source, mode_weights(basis, Complex{-t, 0.0}));
  Eigen::VectorXd probabilities = flatten_row_major(field).real();
  for (int k = 0; k < probabilities.size(); ++k) {
    if (probabilities[k] < -kNegativeProbabilityTol) {
      std::ostringstream msg;
      msg << "classical probability " << probabilities[k] << " at node " << k
          << " below -" << kNegativeProbabilityTol;
      throw numerical_error(msg.str());
    }
    if (probabilities[k] < 0.0) probabilities[k] = 0.0;
  }
  return probabilities;
}

Eigen::VectorXcd chain_amplitudes(int extent, BoundaryCondition bc,
                                  double gamma, int source, double t) {
  validate_time(t);
  if (source < 1 || source > extent) {
    throw std::out_of_range("chain source site out of range");
  }
  const auto modes = chain_modes(extent, bc);
  const Eigen::MatrixXcd vectors = chain_eigenvector_matrix(extent, bc);
  Eigen::VectorXcd weighted(extent);
  for (int m = 0; m < extent; ++m) {
    weighted[m] = std::exp(-kImagUnit * (gamma * modes[m].eigenvalue * t)) *
                  std::conj(vectors(m, source - 1));
  }
  return vectors.transpose() * weighted;
}

double classical_avg_return(const Eigen::VectorXd& eigenvalues, double t) {
  validate_time(t);
  return (-t * eigenvalues.array()).exp().mean();
}

double quantum_avg_return(const SpectralBasis& basis, double t) {
  validate_time(t);
  // alpha_kk(t) = sum_n exp(-i lambda_n t) |<k|q_n>|^2 factorizes over the
  // tensor structure, so the diagonal is |X|^2(T) W |Y|^2 with the full
  // two-dimensional phase weights W.
  const Eigen::MatrixXd ax2 = basis.axis_modes_x().cwiseAbs2();
  const Eigen::MatrixXd ay2 = basis.axis_modes_y().cwiseAbs2();
  const Eigen::MatrixXcd diag = ax2.cast<Complex>().transpose() *
                                mode_weights(basis, -kImagUnit * t) *
                                ay2.cast<Complex>();
  return diag.squaredNorm() / basis.size();
}

double lower_bound_mu(const Eigen::VectorXd& eigenvalues, double t) {
  validate_time(t);
  const Complex sum =
      (-kImagUnit * t * eigenvalues.cast<Complex>().array()).exp().sum();
  const double n = static_cast<double>(eigenvalues.size());
  return std::norm(sum) / (n * n);
}

ReturnCurve return_curve(const SpectralBasis& basis,
                         const Eigen::VectorXd& times) {
  ReturnCurve curve;
  curve.times = times;
  curve.classical.resize(times.size());
  curve.quantum.resize(times.size());
  curve.bound.resize(times.size());
  for (int i = 0; i < times.size(); ++i) {
    curve.classical[i] = classical_avg_return(basis.eigenvalues(), times[i]);
    curve.quantum[i] = quantum_avg_return(basis, times[i]);
    curve.bound[i] = lower_bound_mu(basis.eigenvalues(), times[i]);
  }
  return curve;
}

Eigen::VectorXd log_spaced_times(double t_min, double t_max, int count) {
  if (!(t_min > 0.0) || !(t_max > t_min)) {
    throw std::invalid_argument("need 0 < t_min < t_max for a log grid");
  }
  if (count < 2) throw std::invalid_argument("log grid needs >= 2 points");
  Eigen::VectorXd times(count);
  const double step = std::log(t_max / t_min) / (count - 1);
  for (int i = 0; i < count; ++i) times[i] = t_min * std::exp(step * i);
  times[count - 1] = t_max;
  return times;
}

Eigen::VectorXd log_time_grid(double t_min, double t_max,
                              int points_per_decade) {
  if (points_per_decade < 1) {
    throw std::invalid_argument("points per decade must be >= 1");
  }
  if (!(t_min > 0.0) || !(t_max > t_min)) {
    throw std::invalid_argument("need 0 < t_min < t_max for a log grid");
  }
  const double decades = std::log10(t_max / t_min);
  const int count =
      std::max(2, static_cast<int>(std::lround(decades * points_per_decade)) +
                      1);
  return log_spaced_times(t_min, t_max, count);
}

}  // namespace ctqw

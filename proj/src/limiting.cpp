#include "ctqw/limiting.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ctqw/errors.hpp"

namespace ctqw {

namespace {

using Complex = std::complex<double>;

Eigen::VectorXd flatten_row_major(const Eigen::MatrixXd& field) {
  Eigen::VectorXd flat(field.size());
  Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                           Eigen::RowMajor>>(flat.data(), field.rows(),
                                             field.cols()) = field;
  return flat;
}

// Ordered pairs (a, b) of chain modes together with lambda_a - lambda_b.
struct AxisPairs {
  std::vector<std::pair<int, int>> pairs;
  Eigen::VectorXd differences;
};

AxisPairs axis_difference_pairs(const Eigen::VectorXd& lambdas) {
  const int n = static_cast<int>(lambdas.size());
  AxisPairs out;
  out.pairs.reserve(static_cast<std::size_t>(n) * n);
  out.differences.resize(n * n);
  int idx = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      out.pairs.emplace_back(a, b);
      out.differences[idx++] = lambdas[a] - lambdas[b];
    }
  }
  return out;
}

struct ClusteredDifferences {
  std::vector<std::vector<std::pair<int, int>>> groups;  // mode pairs
  std::vector<double> values;                            // group means
};

ClusteredDifferences cluster_differences(const Eigen::VectorXd& lambdas,
                                         double tol) {
  const AxisPairs pairs = axis_difference_pairs(lambdas);
  const auto classes = cluster_values(pairs.differences, tol);
  ClusteredDifferences out;
  out.groups.reserve(classes.size());
  out.values.reserve(classes.size());
  for (const auto& cls : classes) {
    std::vector<std::pair<int, int>> group;
    group.reserve(cls.size());
    double mean = 0.0;
    for (int idx : cls) {
      group.push_back(pairs.pairs[idx]);
      mean += pairs.differences[idx];
    }
    out.groups.push_back(std::move(group));
    out.values.push_back(mean / cls.size());
  }
  return out;
}

// G(k) = sum over pairs (a, b) of <k|a><a|j><j|b><b|k> for one axis.
Eigen::VectorXcd pair_overlap_sum(
    const Eigen::MatrixXcd& vectors, int source,
    const std::vector<std::pair<int, int>>& group) {
  const int extent = static_cast<int>(vectors.cols());
  Eigen::VectorXcd sum = Eigen::VectorXcd::Zero(extent);
  for (const auto& [a, b] : group) {
    const Complex scale =
        std::conj(vectors(a, source - 1)) * vectors(b, source - 1);
    sum.array() += scale * vectors.row(a).transpose().array() *
                   vectors.row(b).transpose().conjugate().array();
  }
  return sum;
}

// Matches x-difference groups with y-difference groups whose values cancel.
std::vector<std::pair<int, int>> matched_groups(
    const ClusteredDifferences& dx, const ClusteredDifferences& dy,
    double tol) {
  std::vector<std::pair<int, int>> matches;
  // dy values ascend (cluster_values orders classes by value); for each dx
  // group search for -dx among them.
  for (std::size_t ix = 0; ix < dx.values.size(); ++ix) {
    const double target = -dx.values[ix];
    auto lo = std::lower_bound(dy.values.begin(), dy.values.end(),
                               target - tol);
    for (; lo != dy.values.end() && *lo < target + tol; ++lo) {
      matches.emplace_back(static_cast<int>(ix),
                           static_cast<int>(lo - dy.values.begin()));
    }
  }
  return matches;
}

int scan_worker_count(int requested, std::size_t tasks) {
  int workers = requested;
  if (workers <= 0) {
    if (const char* env = std::getenv("CTQW_MAX_WORKERS")) {
      workers = std::atoi(env);
    }
  }
  if (workers <= 0) {
    workers = static_cast<int>(std::thread::hardware_concurrency());
  }
  workers = std::max(1, workers);
  return static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(workers), tasks));
}

}  // namespace

std::string to_string(LimitingMethod method) {
  switch (method) {
    case LimitingMethod::Eigenclass:
      return "eigenclass";
    case LimitingMethod::ResonanceFactorized:
      return "resonance-factorized";
    case LimitingMethod::TimeAverage:
      return "time-average-oracle";
  }
  throw std::invalid_argument("unknown limiting method");
}

LimitingDistribution limiting_distribution(const SpectralBasis& basis,
                                           NodeIndex source, double tol) {
  validate_node(basis.spec(), source);
  const int m = basis.spec().extent_x;
  const int n = basis.spec().extent_y;
  const Eigen::MatrixXcd& x = basis.axis_modes_x();
  const Eigen::MatrixXcd& y = basis.axis_modes_y();
  const std::vector<std::vector<int>> fresh =
      tol == kDegeneracyTol ? std::vector<std::vector<int>>{}
                            : degeneracy_classes(basis, tol);
  const auto& classes = tol == kDegeneracyTol ? basis.classes() : fresh;

  Eigen::MatrixXd chi = Eigen::MatrixXd::Zero(m, n);
  Eigen::MatrixXcd class_sum(m, n);
  for (const auto& cls : classes) {
    class_sum.setZero();
    for (int mode : cls) {
      const int mx = mode / n;
      const int my = mode % n;
      const Complex overlap = std::conj(x(mx, source.x - 1)) *
                              std::conj(y(my, source.y - 1));
      class_sum.noalias() +=
          overlap * (x.row(mx).transpose() * y.row(my));
    }
    chi += class_sum.cwiseAbs2();
  }
  return {basis.spec(), source, flatten_row_major(chi),
          LimitingMethod::Eigenclass};
}

LimitingDistribution limiting_distribution_factorized(const LatticeSpec& spec,
                                                      NodeIndex source,
                                                      double tol) {
  spec.validate();
  validate_node(spec, source);
  const SpectralBasis basis(spec);
  const auto dx = cluster_differences(basis.axis_eigenvalues_x(), tol);
  const auto dy = cluster_differences(basis.axis_eigenvalues_y(), tol);

  Eigen::MatrixXcd acc =
      Eigen::MatrixXcd::Zero(spec.extent_x, spec.extent_y);
  for (const auto& [ix, iy] : matched_groups(dx, dy, tol)) {
    const Eigen::VectorXcd gx =
        pair_overlap_sum(basis.axis_modes_x(), source.x, dx.groups[ix]);
    const Eigen::VectorXcd gy =
        pair_overlap_sum(basis.axis_modes_y(), source.y, dy.groups[iy]);
    acc.noalias() += gx * gy.transpose();
  }

  const double imag_leak = acc.imag().cwiseAbs().maxCoeff();
  if (imag_leak > 1e-9) {
    std::ostringstream msg;
    msg << "factorized limiting distribution has imaginary residue "
        << imag_leak;
    throw numerical_error(msg.str());
  }
  return {spec, source, flatten_row_major(acc.real()),
          LimitingMethod::ResonanceFactorized};
}

std::size_t resonant_quadruple_count(const LatticeSpec& spec, double tol) {
  spec.validate();
  const SpectralBasis basis(spec);
  const auto dx = cluster_differences(basis.axis_eigenvalues_x(), tol);
  const auto dy = cluster_differences(basis.axis_eigenvalues_y(), tol);
  std::size_t count = 0;
  for (const auto& [ix, iy] : matched_groups(dx, dy, tol)) {
    count += dx.groups[ix].size() * dy.groups[iy].size();
  }
  return count;
}

std::vector<std::pair<double, int>> chain_difference_census(
    int extent, BoundaryCondition bc, double tol) {
  const auto modes = chain_modes(extent, bc);
  std::vector<double> diffs;
  diffs.reserve(static_cast<std::size_t>(extent) * (extent - 1));
  for (int a = 0; a < extent; ++a) {
    for (int b = 0; b < extent; ++b) {
      if (a != b) diffs.push_back(modes[a].eigenvalue - modes[b].eigenvalue);
    }
  }
  Eigen::VectorXd values =
      Eigen::Map<const Eigen::VectorXd>(diffs.data(), diffs.size());
  std::vector<std::pair<double, int>> census;
  for (const auto& cls : cluster_values(values, tol)) {
    double mean = 0.0;
    for (int idx : cls) mean += values[idx];
    census.emplace_back(mean / cls.size(), static_cast<int>(cls.size()));
  }
  return census;
}

Eigen::VectorXd marginal(const LimitingDistribution& dist, Axis axis) {
  const int m = dist.spec.extent_x;
  const int n = dist.spec.extent_y;
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      chi(dist.values.data(), m, n);
  if (axis == Axis::X) return chi.rowwise().sum();
  return chi.colwise().sum().transpose();
}

std::string to_string(MirrorKind kind) {
  return kind == MirrorKind::OppositeCorner ? "opposite-corner" : "axial";
}

NodeIndex mirror_node(const LatticeSpec& spec, MirrorKind kind) {
  if (kind == MirrorKind::OppositeCorner) {
    return {spec.extent_x, spec.extent_y};
  }
  return {1, spec.extent_y};
}

std::vector<AsymmetryScanRow> asymmetry_scan(const ScanRequest& request) {
  if (request.from < 2 || request.to < request.from) {
    throw std::invalid_argument("scan range must satisfy 2 <= from <= to");
  }
  if (request.vary != ScanRequest::Vary::Both && request.fixed_extent < 2) {
    throw std::invalid_argument("fixed extent must be >= 2");
  }
  if (!(request.threshold > 0.0)) {
    throw std::invalid_argument("asymmetry threshold must be > 0");
  }

  std::vector<LatticeSpec> specs;
  for (int v = request.from; v <= request.to; ++v) {
    LatticeSpec spec;
    spec.bc_x = request.bc_x;
    spec.bc_y = request.bc_y;
    spec.gamma = request.gamma;
    switch (request.vary) {
      case ScanRequest::Vary::Both:
        spec.extent_x = spec.extent_y = v;
        break;
      case ScanRequest::Vary::X:
        spec.extent_x = v;
        spec.extent_y = request.fixed_extent;
        break;
      case ScanRequest::Vary::Y:
        spec.extent_x = request.fixed_extent;
        spec.extent_y = v;
        break;
    }
    spec.validate();
    specs.push_back(spec);
  }

  std::vector<AsymmetryScanRow> rows(specs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < specs.size();
         i = next.fetch_add(1)) {
      try {
        const LatticeSpec& spec = specs[i];
        const SpectralBasis basis(spec);
        const NodeIndex corner{1, 1};
        const NodeIndex mirror = mirror_node(spec, request.mirror);
        const LimitingDistribution dist =
            limiting_distribution(basis, corner);
        const double delta = dist.values[flat_index(spec, corner)] -
                             dist.values[flat_index(spec, mirror)];
        rows[i] = {spec.extent_x,     spec.extent_y, spec.bc_x,
                   spec.bc_y,         request.mirror, delta,
                   std::abs(delta) > request.threshold};
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const int workers = scan_worker_count(request.max_workers, specs.size());
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& thread : pool) thread.join();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace ctqw

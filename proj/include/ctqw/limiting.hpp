#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <vector>

#include "ctqw/lattice.hpp"
#include "ctqw/spectral.hpp"

namespace ctqw {

// Deltas smaller than this count as "symmetric" in asymmetry scans. Genuine
// asymmetries are O(1e-4)-O(1e-3); class-sum noise stays below 1e-12.
inline constexpr double kAsymmetryThreshold = 1e-8;

enum class LimitingMethod { Eigenclass, ResonanceFactorized, TimeAverage };

std::string to_string(LimitingMethod method);

// Long-time averaged transition probabilities chi_{k,j} from one source.
struct LimitingDistribution {
  LatticeSpec spec;
  NodeIndex source;
  Eigen::VectorXd values;  // flat node order, sums to 1
  LimitingMethod method = LimitingMethod::Eigenclass;
};

// chi_{k,j} = sum over degeneracy classes of |<k|P_class|j>|^2.
LimitingDistribution limiting_distribution(const SpectralBasis& basis,
                                           NodeIndex source,
                                           double tol = kDegeneracyTol);

// Same distribution assembled from resonant chain-mode quadruples
// (theta_x, theta'_x, theta_y, theta'_y) whose total eigenvalue difference
// vanishes within tol; agrees with the eigenclass route to 1e-9.
LimitingDistribution limiting_distribution_factorized(
    const LatticeSpec& spec, NodeIndex source, double tol = kDegeneracyTol);

// Number of resonant quadruples contributing to the factorized sum.
std::size_t resonant_quadruple_count(const LatticeSpec& spec,
                                     double tol = kDegeneracyTol);

// Multiplicity census of chain eigenvalue differences lambda_m - lambda_m'
// over ordered pairs m != m', clustered within tol; (value, count) sorted by
// value. Sizes whose censuses hold values of multiplicity > 2 are the ones
// with asymmetric limiting distributions.
std::vector<std::pair<double, int>> chain_difference_census(
    int extent, BoundaryCondition bc, double tol = kDegeneracyTol);

enum class Axis { X, Y };

// Sum of chi along the other axis; index runs over the retained axis.
Eigen::VectorXd marginal(const LimitingDistribution& dist, Axis axis);

enum class MirrorKind { OppositeCorner, Axial };

std::string to_string(MirrorKind kind);

// Mirror of the source corner c = (1,1): (M,N) for opposite-corner, (1,N)
// for axial.
NodeIndex mirror_node(const LatticeSpec& spec, MirrorKind kind);

struct AsymmetryScanRow {
  int extent_x = 0;
  int extent_y = 0;
  BoundaryCondition bc_x = BoundaryCondition::Open;
  BoundaryCondition bc_y = BoundaryCondition::Open;
  MirrorKind mirror = MirrorKind::OppositeCorner;
  double delta = 0.0;  // chi_{c,c} - chi_{mirror,c}
  bool asymmetric = false;
};

struct ScanRequest {
  enum class Vary { Both, X, Y };

  BoundaryCondition bc_x = BoundaryCondition::Open;
  BoundaryCondition bc_y = BoundaryCondition::Open;
  MirrorKind mirror = MirrorKind::OppositeCorner;
  Vary vary = Vary::Both;
  int fixed_extent = 0;  // the non-varying extent when vary != Both
  int from = 0;          // inclusive range of the varying extent
  int to = 0;
  double gamma = 1.0;
  double threshold = kAsymmetryThreshold;
  int max_workers = 0;  // 0 = CTQW_MAX_WORKERS env or hardware concurrency
};

// One row per size, ordered by size regardless of worker completion order.
std::vector<AsymmetryScanRow> asymmetry_scan(const ScanRequest& request);

}  // namespace ctqw

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "ctqw/limiting.hpp"
#include "ctqw/lattice.hpp"
#include "ctqw/spectral.hpp"
#include "oracles.hpp"

using namespace ctqw;

TEST_CASE("normalization, range and exchange symmetry") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 15; ++trial) {
    const LatticeSpec spec = testing::random_spec(rng);
    const SpectralBasis basis(spec);
    const NodeIndex j = testing::random_node(rng, spec);
    const LimitingDistribution dist = limiting_distribution(basis, j);

    CHECK(std::abs(dist.values.sum() - 1.0) < 1e-9);
    CHECK(dist.values.minCoeff() >= 0.0);
    CHECK(dist.values.maxCoeff() <= 1.0 + 1e-12);

    const NodeIndex k = testing::random_node(rng, spec);
    const LimitingDistribution from_k = limiting_distribution(basis, k);
    CHECK(std::abs(dist.values[flat_index(spec, k)] -
                   from_k.values[flat_index(spec, j)]) < 1e-10);
  }
}

TEST_CASE("torus limiting distributions are translation invariant") {
  const LatticeSpec spec = make_torus(6, 5);
  const SpectralBasis basis(spec);
  const LimitingDistribution origin = limiting_distribution(basis, {1, 1});
  const LimitingDistribution moved = limiting_distribution(basis, {4, 3});
  for (int k = 0; k < spec.num_nodes(); ++k) {
    const NodeIndex node = node_at(spec, k);
    const NodeIndex shifted{(node.x - 1 + 3) % spec.extent_x + 1,
                            (node.y - 1 + 2) % spec.extent_y + 1};
    CHECK(std::abs(origin.values[k] -
                   moved.values[flat_index(spec, shifted)]) < 1e-12);
  }
}

TEST_CASE("square torus distributions are symmetric under x-y exchange") {
  const LatticeSpec spec = make_torus(5, 5);
  const SpectralBasis basis(spec);
  const NodeIndex source{2, 4};
  const LimitingDistribution dist = limiting_distribution(basis, source);
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      const NodeIndex displaced{(source.x - 1 + a) % 5 + 1,
                                (source.y - 1 + b) % 5 + 1};
      const NodeIndex exchanged{(source.x - 1 + b) % 5 + 1,
                                (source.y - 1 + a) % 5 + 1};
      CHECK(std::abs(dist.values[flat_index(spec, displaced)] -
                     dist.values[flat_index(spec, exchanged)]) < 1e-12);
    }
  }
}

TEST_CASE("reflection through the source on a periodic axis") {
  const LatticeSpec spec = make_cylinder(8, 5);
  const SpectralBasis basis(spec);
  const NodeIndex source{3, 2};
  const LimitingDistribution dist = limiting_distribution(basis, source);
  for (int k = 0; k < spec.num_nodes(); ++k) {
    const NodeIndex node = node_at(spec, k);
    const int d = (node.x - source.x + spec.extent_x) % spec.extent_x;
    const int reflected_x =
        (source.x - 1 - d + 2 * spec.extent_x) % spec.extent_x + 1;
    CHECK(std::abs(dist.values[k] -
                   dist.values[flat_index(spec, {reflected_x, node.y})]) <
          1e-12);
  }
}

TEST_CASE("15x15 square: corner and opposite corner differ") {
  const LatticeSpec spec = make_rectangle(15, 15);
  const SpectralBasis basis(spec);
  const LimitingDistribution dist = limiting_distribution(basis, {1, 1});
  const double delta = dist.values[flat_index(spec, {1, 1})] -
                       dist.values[flat_index(spec, {15, 15})];
  CHECK(std::abs(delta) > 1e-8);
  CHECK(std::abs(delta) > 1e-4);  // the effect is well above the threshold
}

TEST_CASE("eigenclass result equals the direct time average on 4x3") {
  const LatticeSpec spec = make_rectangle(4, 3);
  const SpectralBasis basis(spec);
  const LimitingDistribution dist = limiting_distribution(basis, {1, 1});
  const Eigen::VectorXd averaged =
      testing::time_average_oracle(basis, {1, 1}, 1e4, 0.01);
  CHECK((dist.values - averaged).cwiseAbs().maxCoeff() < 2e-3);
}

TEST_CASE("factorized route equals the eigenclass route") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 12; ++trial) {
    const LatticeSpec spec = testing::random_spec(rng, 64);
    const SpectralBasis basis(spec);
    const NodeIndex j = testing::random_node(rng, spec);
    const LimitingDistribution eigenclass = limiting_distribution(basis, j);
    const LimitingDistribution factorized =
        limiting_distribution_factorized(spec, j);
    CHECK(factorized.method == LimitingMethod::ResonanceFactorized);
    CHECK((eigenclass.values - factorized.values).cwiseAbs().maxCoeff() <
          1e-9);
  }

  for (const int extent : {14, 15}) {
    const LatticeSpec spec = make_cylinder(extent, extent);
    const SpectralBasis basis(spec);
    const LimitingDistribution eigenclass =
        limiting_distribution(basis, {1, 1});
    const LimitingDistribution factorized =
        limiting_distribution_factorized(spec, {1, 1});
    CHECK((eigenclass.values - factorized.values).cwiseAbs().maxCoeff() <
          1e-9);
  }
}

TEST_CASE("resonant quadruple count matches brute force on 3x3") {
  const LatticeSpec spec = make_rectangle(3, 3);
  CHECK(resonant_quadruple_count(spec) ==
        testing::brute_force_quadruple_count(spec, kDegeneracyTol));

  const LatticeSpec torus = make_torus(4, 3);
  CHECK(resonant_quadruple_count(torus) ==
        testing::brute_force_quadruple_count(torus, kDegeneracyTol));
}

TEST_CASE("chain difference census separates 14 from 15") {
  auto max_multiplicity = [](int extent) {
    int result = 0;
    for (const auto& [value, count] :
         chain_difference_census(extent, BoundaryCondition::Open)) {
      result = std::max(result, count);
    }
    return result;
  };
  CHECK(max_multiplicity(15) > 2);
  CHECK(max_multiplicity(14) <= 2);
}

TEST_CASE("ring marginals of cylinders") {
  SUBCASE("15x15: single maximum (2M-1)/M^2 and plateau (M-1)/M^2") {
    const LatticeSpec spec = make_cylinder(15, 15);
    const SpectralBasis basis(spec);
    const LimitingDistribution dist = limiting_distribution(basis, {1, 1});
    const Eigen::VectorXd ring = marginal(dist, Axis::X);
    REQUIRE(ring.size() == 15);
    CHECK(std::abs(ring.sum() - 1.0) < 1e-9);
    CHECK(std::abs(ring[0] - 29.0 / 225.0) < 1e-9);
    for (int i = 1; i < 15; ++i) CHECK(std::abs(ring[i] - 14.0 / 225.0) < 1e-9);
  }

  SUBCASE("14x14: maxima at k_x = 1 and k_x = 8") {
    const LatticeSpec spec = make_cylinder(14, 14);
    const SpectralBasis basis(spec);
    const LimitingDistribution dist = limiting_distribution(basis, {1, 1});
    const Eigen::VectorXd ring = marginal(dist, Axis::X);
    const double peak = ring.maxCoeff();
    for (int i = 0; i < 14; ++i) {
      if (i == 0 || i == 7) {
        CHECK(std::abs(ring[i] - peak) < 1e-12);
      } else {
        CHECK(ring[i] < peak - 1e-3);
      }
    }
  }

  SUBCASE("chain marginal length and normalization") {
    const LatticeSpec spec = make_cylinder(6, 4);
    const SpectralBasis basis(spec);
    const LimitingDistribution dist = limiting_distribution(basis, {2, 1});
    const Eigen::VectorXd chain = marginal(dist, Axis::Y);
    REQUIRE(chain.size() == 4);
    CHECK(std::abs(chain.sum() - 1.0) < 1e-9);
  }
}

TEST_CASE("cylinder row mirror symmetry holds for 14x14, breaks for 15x15") {
  // Reflection of the open axis, ky <-> M+1-ky in 1-based labels.
  auto max_mirror_deviation = [](int extent) {
    const LatticeSpec spec = make_cylinder(extent, extent);
    const SpectralBasis basis(spec);
    const LimitingDistribution dist = limiting_distribution(basis, {1, 1});
    double worst = 0.0;
    for (int k = 0; k < spec.num_nodes(); ++k) {
      const NodeIndex node = node_at(spec, k);
      const NodeIndex mirrored{node.x, extent + 1 - node.y};
      worst = std::max(worst,
                       std::abs(dist.values[k] -
                                dist.values[flat_index(spec, mirrored)]));
    }
    return worst;
  };
  CHECK(max_mirror_deviation(14) < 1e-10);
  CHECK(max_mirror_deviation(15) > 1e-8);
}

TEST_CASE("centre-seeded distributions coincide across topologies") {
  const NodeIndex centre{8, 8};
  const LimitingDistribution square =
      limiting_distribution(SpectralBasis(make_rectangle(15, 15)), centre);
  const LimitingDistribution cylinder =
      limiting_distribution(SpectralBasis(make_cylinder(15, 15)), centre);
  const LimitingDistribution torus =
      limiting_distribution(SpectralBasis(make_torus(15, 15)), centre);
  CHECK((square.values - cylinder.values).cwiseAbs().maxCoeff() < 5e-3);
  CHECK((cylinder.values - torus.values).cwiseAbs().maxCoeff() < 5e-3);

  // Plateau sits at roughly half the off-centre local maxima.
  const LatticeSpec spec = make_cylinder(15, 15);
  const double local_max = cylinder.values[flat_index(spec, {4, 4})];
  const double plateau = cylinder.values[flat_index(spec, {3, 5})];
  const double ratio = plateau / local_max;
  CHECK(ratio > 0.4);
  CHECK(ratio < 0.6);
}

TEST_CASE("asymmetry scans") {
  SUBCASE("squares with open boundaries, 4..16") {
    ScanRequest request;
    request.vary = ScanRequest::Vary::Both;
    request.from = 4;
    request.to = 16;
    const auto rows = asymmetry_scan(request);
    REQUIRE(rows.size() == 13);
    for (const auto& row : rows) {
      const bool expected =
          row.extent_x == 6 || row.extent_x == 12 || row.extent_x == 15;
      CHECK(row.asymmetric == expected);
      CHECK(std::abs(row.delta) <= 1.0);
    }
  }

  SUBCASE("cylinders 15xN, N = 4..12, axial mirror") {
    ScanRequest request;
    request.bc_x = BoundaryCondition::Periodic;
    request.mirror = MirrorKind::Axial;
    request.vary = ScanRequest::Vary::Y;
    request.fixed_extent = 15;
    request.from = 4;
    request.to = 12;
    const auto rows = asymmetry_scan(request);
    REQUIRE(rows.size() == 9);
    for (const auto& row : rows) {
      CHECK(row.asymmetric == (row.extent_y == 10));
    }
  }

  SUBCASE("Mx15 rectangles alternate for 4 <= M <= 13") {
    ScanRequest request;
    request.vary = ScanRequest::Vary::X;
    request.fixed_extent = 15;
    request.from = 4;
    request.to = 13;
    const auto rows = asymmetry_scan(request);
    for (const auto& row : rows) {
      CHECK(row.asymmetric == (row.extent_x % 2 == 0));
    }
  }

  SUBCASE("worker count does not change the rows") {
    ScanRequest request;
    request.vary = ScanRequest::Vary::Both;
    request.from = 4;
    request.to = 10;
    request.max_workers = 1;
    const auto serial = asymmetry_scan(request);
    request.max_workers = 4;
    const auto parallel = asymmetry_scan(request);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].delta == parallel[i].delta);
      CHECK(serial[i].extent_x == parallel[i].extent_x);
    }
  }

  SUBCASE("bad requests are rejected") {
    ScanRequest request;
    request.from = 5;
    request.to = 4;
    CHECK_THROWS_AS(asymmetry_scan(request), std::invalid_argument);
    request.to = 8;
    request.vary = ScanRequest::Vary::X;
    request.fixed_extent = 0;
    CHECK_THROWS_AS(asymmetry_scan(request), std::invalid_argument);
  }
}

TEST_CASE("limiting distributions do not depend on the transmission rate") {
  const NodeIndex source{2, 3};
  const LimitingDistribution slow =
      limiting_distribution(SpectralBasis(make_cylinder(6, 5, 1.0)), source);
  const LimitingDistribution fast =
      limiting_distribution(SpectralBasis(make_cylinder(6, 5, 3.7)), source);
  CHECK((slow.values - fast.values).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("mirror nodes follow the paper's conventions") {
  const LatticeSpec spec = make_cylinder(9, 7);
  CHECK(mirror_node(spec, MirrorKind::OppositeCorner) == NodeIndex{9, 7});
  CHECK(mirror_node(spec, MirrorKind::Axial) == NodeIndex{1, 7});
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "ctqw/lattice.hpp"
#include "ctqw/spectral.hpp"
#include "oracles.hpp"

using namespace ctqw;

TEST_CASE("2x2 rectangle Hamiltonian is the 4-cycle Laplacian") {
  const Eigen::MatrixXd h = build_hamiltonian(make_rectangle(2, 2));
  Eigen::MatrixXd expected(4, 4);
  expected << 2, -1, -1, 0,
             -1,  2,  0, -1,
             -1,  0,  2, -1,
              0, -1, -1,  2;
  CHECK((h - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("functionality by topology") {
  const LatticeSpec torus = make_torus(5, 4);
  for (int x = 1; x <= 5; ++x) {
    for (int y = 1; y <= 4; ++y) {
      CHECK(functionality(torus, {x, y}) == 4);
    }
  }

  const LatticeSpec cylinder = make_cylinder(5, 4);
  CHECK(functionality(cylinder, {2, 1}) == 3);
  CHECK(functionality(cylinder, {2, 4}) == 3);
  CHECK(functionality(cylinder, {2, 2}) == 4);

  const LatticeSpec rectangle = make_rectangle(5, 4);
  CHECK(functionality(rectangle, {1, 1}) == 2);
  CHECK(functionality(rectangle, {5, 4}) == 2);
  CHECK(functionality(rectangle, {3, 1}) == 3);
  CHECK(functionality(rectangle, {3, 2}) == 4);
}

TEST_CASE("torus diagonal is 4*gamma, boundary rows scale with gamma") {
  const double gamma = 1.75;
  const Eigen::MatrixXd h = build_hamiltonian(make_torus(4, 3, gamma));
  for (int i = 0; i < h.rows(); ++i) CHECK(h(i, i) == doctest::Approx(4 * gamma));

  const LatticeSpec rect = make_rectangle(4, 3, gamma);
  const Eigen::MatrixXd hr = build_hamiltonian(rect);
  CHECK(hr(flat_index(rect, {1, 1}), flat_index(rect, {1, 1})) ==
        doctest::Approx(2 * gamma));
  CHECK(hr(flat_index(rect, {2, 1}), flat_index(rect, {2, 1})) ==
        doctest::Approx(3 * gamma));
  CHECK(hr(flat_index(rect, {2, 2}), flat_index(rect, {2, 2})) ==
        doctest::Approx(4 * gamma));
}

TEST_CASE("Hamiltonian invariants over a random battery") {
  std::mt19937 rng(20260811);
  for (int trial = 0; trial < 25; ++trial) {
    const LatticeSpec spec = testing::random_spec(rng);
    CAPTURE(spec.extent_x);
    CAPTURE(spec.extent_y);
    const Eigen::MatrixXd h = build_hamiltonian(spec);

    CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(h.rowwise().sum().cwiseAbs().maxCoeff() < 1e-12);

    for (int i = 0; i < h.rows(); ++i) {
      CHECK(h(i, i) ==
            doctest::Approx(spec.gamma * functionality(spec, node_at(spec, i)))
                .epsilon(1e-12));
      for (int j = 0; j < h.cols(); ++j) {
        if (i == j) continue;
        const bool bond = h(i, j) != 0.0;
        CHECK((h(i, j) == 0.0 || h(i, j) == -spec.gamma));
        (void)bond;
      }
    }

    const auto [eigenvalues, eigenvectors] = numerical_diagonalize(h);
    const double scale = h.cwiseAbs().maxCoeff();
    CHECK(eigenvalues[0] > -1e-12 * scale);   // positive semidefinite
    CHECK(std::abs(eigenvalues[0]) < 1e-10);  // zero mode present
    CHECK(eigenvalues[1] > 1e-8);             // and unique (connected)
  }
}

TEST_CASE("torus Hamiltonian commutes with both cyclic shifts") {
  const LatticeSpec spec = make_torus(5, 4);
  const Eigen::MatrixXd h = build_hamiltonian(spec);
  const int n_nodes = spec.num_nodes();

  auto shift_matrix = [&](int dx, int dy) {
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n_nodes, n_nodes);
    for (int flat = 0; flat < n_nodes; ++flat) {
      const NodeIndex node = node_at(spec, flat);
      const NodeIndex moved{(node.x - 1 + dx) % spec.extent_x + 1,
                            (node.y - 1 + dy) % spec.extent_y + 1};
      s(flat_index(spec, moved), flat) = 1.0;
    }
    return s;
  };

  for (const auto& s : {shift_matrix(1, 0), shift_matrix(0, 1)}) {
    CHECK((h * s - s * h).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("flat index is a bijection with the documented layout") {
  const LatticeSpec spec = make_rectangle(7, 5);
  CHECK(flat_index(spec, {1, 1}) == 0);
  CHECK(flat_index(spec, {1, 2}) == 1);
  CHECK(flat_index(spec, {2, 1}) == 5);
  for (int flat = 0; flat < spec.num_nodes(); ++flat) {
    CHECK(flat_index(spec, node_at(spec, flat)) == flat);
  }
}

TEST_CASE("invalid specs and nodes are rejected") {
  CHECK_THROWS_AS(make_rectangle(1, 3).validate(), std::invalid_argument);
  CHECK_THROWS_AS(make_rectangle(3, 1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(make_torus(2, 4).validate(), std::invalid_argument);
  CHECK_THROWS_AS(make_cylinder(2, 4).validate(), std::invalid_argument);
  CHECK_NOTHROW(make_cylinder(3, 2).validate());
  CHECK_THROWS_AS(make_rectangle(3, 3, 0.0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(make_rectangle(3, 3, -1.0).validate(), std::invalid_argument);

  const LatticeSpec spec = make_rectangle(3, 3);
  CHECK_THROWS_AS(functionality(spec, {0, 1}), std::out_of_range);
  CHECK_THROWS_AS(functionality(spec, {1, 4}), std::out_of_range);
  CHECK_THROWS_AS(node_at(spec, 9), std::out_of_range);

  CHECK_THROWS_AS(parse_boundary_condition("twisted"), std::invalid_argument);
  CHECK(parse_boundary_condition("periodic") == BoundaryCondition::Periodic);
  CHECK(to_string(BoundaryCondition::Open) == "open");
}

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qglab/families.hpp"
#include "qglab/fem.hpp"
#include "qglab/spectral.hpp"

using namespace qglab;
using std::numbers::pi;

TEST_CASE("single element matrices") {
  MetricGraph g = make_path(2.0);
  FemSystem s = assemble(g, make_mesh(g, std::vector<int>{1}));
  Eigen::MatrixXd K(s.stiffness), M(s.mass);
  REQUIRE(K.rows() == 2);
  CHECK(K(0, 0) == doctest::Approx(0.5));
  CHECK(K(0, 1) == doctest::Approx(-0.5));
  CHECK(M(0, 0) == doctest::Approx(2.0 / 3.0));
  CHECK(M(0, 1) == doctest::Approx(2.0 / 6.0));
}

TEST_CASE("dirichlet vertices carry no dof") {
  MetricGraph g = parse_graph("vertex a dirichlet\nvertex b\nedge e a b 1");
  Mesh m = make_mesh(g, std::vector<int>{4});
  CHECK(m.dof_count == 4);
  CHECK(m.node_dofs[0].front() == -1);
}

TEST_CASE("star centre dof is shared") {
  MetricGraph g = make_star({1.0, 0.5, 3});
  Mesh m = make_mesh(g, 0.05);
  const std::size_t c = g.vertex_index("c");
  long shared = -2;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    const long dof = edge.u == c ? m.node_dofs[e].front() : m.node_dofs[e].back();
    if (shared == -2) shared = dof;
    CHECK(dof == shared);
  }
  std::size_t nodes = 0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) nodes += m.elements[e] - 1;
  CHECK(m.dof_count == nodes + 1 + 3);
}

TEST_CASE("mass sums to total length and stiffness kills constants") {
  MetricGraph g = make_tadpole(1.3, 0.4);
  FemSystem s = assemble(g, make_mesh(g, 0.1));
  Eigen::VectorXd one = Eigen::VectorXd::Ones(s.mass.rows());
  CHECK(one.dot(s.mass * one) == doctest::Approx(1.7).epsilon(1e-13));
  CHECK((s.stiffness * one).norm() < 1e-10);
}

TEST_CASE("extrapolated eigenvalues match exact ones") {
  auto within = [](const FemEstimate& e, double exact) { return std::abs(e.extrapolated - exact) <= e.tolerance(); };
  auto path = fem_eigenvalues(make_path(1.0), 2);
  CHECK(std::abs(path[0].extrapolated) < 1e-10);
  CHECK(within(path[1], pi * pi));
  auto loop = fem_eigenvalues(make_loop(1.0), 3);
  CHECK(within(loop[1], 4 * pi * pi));
  CHECK(within(loop[2], 4 * pi * pi));
  auto star = fem_eigenvalues(make_star({1.0, 0.5, 3}), 1);
  CHECK(within(star[0], 4.3864908449286038306));
}

TEST_CASE("P1 eigenvalues converge from above at second order") {
  MetricGraph g = make_path(1.0);
  double prev_err = 0.0;
  for (int n : {8, 16, 32, 64}) {
    const double lam = fem_eigenvalues_on(g, make_mesh(g, std::vector<int>{n}), 2)[1];
    const double err = lam - pi * pi;
    CHECK(err > 0);
    if (prev_err > 0) CHECK(std::log2(prev_err / err) == doctest::Approx(2.0).epsilon(0.02));
    prev_err = err;
  }
}

TEST_CASE("iterative solver agrees with dense solver") {
  MetricGraph g = make_dn(2.0, 1.0, 3);
  Mesh small = make_mesh(g, 0.01);
  REQUIRE(small.dof_count <= kDenseDofLimit);
  Mesh big = refine(g, small);
  REQUIRE(big.dof_count > kDenseDofLimit);
  const auto coarse = fem_eigenvalues_on(g, small, 4);
  const auto fine = fem_eigenvalues_on(g, big, 4);
  const auto exact = eigenvalues(g, 4).values;
  for (int i = 1; i < 4; ++i) {
    CHECK(fine[i] >= exact[i] - 1e-9);
    CHECK(fine[i] <= coarse[i] + 1e-9);
    CHECK(std::abs((4 * fine[i] - coarse[i]) / 3 - exact[i]) < 1e-5 * exact[i]);
  }
}

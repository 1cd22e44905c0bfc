#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qglab/families.hpp"
#include "qglab/fem.hpp"
#include "qglab/spectral.hpp"
#include "qglab/surgery.hpp"
#include "qglab/verify.hpp"

using namespace qglab;
using std::numbers::pi;

namespace {

MetricGraph sample(std::uint64_t seed, int beta, int max_edges = 6) {
  RandomGraphSpec s;
  s.seed = seed;
  s.beta = beta;
  s.max_edges = max_edges;
  return random_graph(s);
}

GraphPoint random_point(const MetricGraph& g, Rng& rng) {
  const auto e = static_cast<std::size_t>(rng.integer(0, static_cast<int>(g.edge_count()) - 1));
  return {e, rng.uniform() * g.edge(e).length};
}

// Brute force from vertex distances: every route leaves p's edge and enters
// q's edge through an endpoint, or stays on a shared edge.
double brute_distance(const MetricGraph& g, const std::vector<std::vector<double>>& vd, GraphPoint p, GraphPoint q) {
  const Edge& ep = g.edge(p.edge);
  const Edge& eq = g.edge(q.edge);
  const double pu = p.offset, pv = ep.length - p.offset;
  const double qu = q.offset, qv = eq.length - q.offset;
  double best = std::min({pu + vd[ep.u][eq.u] + qu, pu + vd[ep.u][eq.v] + qv, pv + vd[ep.v][eq.u] + qu,
                          pv + vd[ep.v][eq.v] + qv});
  if (p.edge == q.edge) best = std::min(best, std::abs(p.offset - q.offset));
  return best;
}

}  // namespace

TEST_CASE("distance is a metric") {
  Rng rng(17);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    MetricGraph g = sample(seed, static_cast<int>(seed % 3));
    const auto vd = vertex_distances(g);
    const double diam = diameter(g);
    CHECK(diam <= total_length(g) + 1e-12);
    for (int i = 0; i < 20; ++i) {
      GraphPoint a = random_point(g, rng), b = random_point(g, rng), c = random_point(g, rng);
      const double ab = distance(g, a, b);
      CHECK(ab == doctest::Approx(distance(g, b, a)).epsilon(1e-14));
      CHECK(ab <= distance(g, a, c) + distance(g, c, b) + 1e-12);
      CHECK(distance(g, a, a) == 0.0);
      CHECK(ab == doctest::Approx(brute_distance(g, vd, a, b)).epsilon(1e-12));
      CHECK(ab <= diam + 1e-12);
    }
  }
}

TEST_CASE("diameter matches a grid search") {
  // distance is 1-Lipschitz in each argument, so the grid maximum is within
  // one step of the true diameter.
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    MetricGraph g = sample(seed, static_cast<int>(seed % 3), 5);
    const auto vd = vertex_distances(g);
    const double step = 2e-3;
    std::vector<GraphPoint> pts;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const int n = static_cast<int>(std::ceil(g.edge(e).length / step));
      for (int i = 0; i <= n; ++i) pts.push_back({e, g.edge(e).length * i / n});
    }
    double grid = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) grid = std::max(grid, brute_distance(g, vd, pts[i], pts[j]));
    const double diam = diameter(g);
    CHECK(diam >= grid - 1e-12);
    CHECK(diam <= grid + step);
    const DiameterWitness w = diameter_witness(g);
    CHECK(distance(g, w.p, w.q) == doctest::Approx(diam).epsilon(1e-12));
  }
}

TEST_CASE("betti grows by one per added edge") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    MetricGraph t = sample(seed, 0);
    CHECK(betti(t) == 0);
    std::string text = to_mgf(t) + "edge extra " + t.vertex(0).id + " " + t.vertex(t.vertex_count() - 1).id + " 0.5\n";
    CHECK(betti(parse_graph(text)) == 1);
  }
}

TEST_CASE("eigenpairs satisfy vertex conditions and are orthonormal") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    MetricGraph g = sample(seed, static_cast<int>(seed % 3));
    const Spectrum s = eigenvalues(g, 5);
    std::vector<Eigenpair> basis;
    for (std::size_t i = 1; i <= 5; ++i) {
      if (i > 1 && s[i - 1] - s[i - 2] < 1e-9 * (1 + s[i - 1])) continue;
      for (Eigenpair& ep : eigenfunctions_at(g, i)) basis.push_back(std::move(ep));
    }
    for (const Eigenpair& ep : basis) CHECK(vertex_residual(g, ep.function()) <= 1e-8);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i; j < basis.size(); ++j) {
        const double ip = inner_product(g, basis[i].function(), basis[j].function());
        CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) <= 1e-8);
      }
  }
}

TEST_CASE("weyl count") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    MetricGraph g = sample(seed, static_cast<int>(seed % 3));
    const double L = total_length(g);
    const double K = 20 * pi / L;
    const double count = static_cast<double>(eigenvalue_count(g, K));
    CHECK(std::abs(count - L * K / pi) <= g.vertex_count() + 2);
  }
}

TEST_CASE("both locators agree") {
  SolverOptions scan;
  scan.locator = RootLocator::SingularScan;
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    MetricGraph g = sample(seed, static_cast<int>(seed % 3));
    const Spectrum a = eigenvalues(g, 6), b = eigenvalues(g, 6, scan);
    for (std::size_t i = 0; i < 6; ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-9));
  }
}

TEST_CASE("fem values bound the exact ones from above") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    MetricGraph g = sample(seed, static_cast<int>(seed % 3));
    const auto exact = eigenvalues(g, 4).values;
    const auto fem = fem_eigenvalues_on(g, make_mesh(g, g.min_edge_length() / 8), 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(fem[i] >= exact[i] - 1e-9 * (1 + exact[i]));
  }
}

TEST_CASE("surgery monotonicity on random graphs") {
  Rng rng(23);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    MetricGraph g = sample(seed, static_cast<int>(seed % 3));
    const auto v1 = static_cast<std::size_t>(rng.integer(0, static_cast<int>(g.vertex_count()) - 1));
    auto v2 = static_cast<std::size_t>(rng.integer(0, static_cast<int>(g.vertex_count()) - 1));
    if (v1 != v2) CHECK(check_glue(g, v1, v2).verdict == Verdict::Holds);
    const auto e = static_cast<std::size_t>(rng.integer(0, static_cast<int>(g.edge_count()) - 1));
    CHECK(check_lengthen(g, e, rng.uniform(0.01, 0.5)).verdict == Verdict::Holds);
  }
}

TEST_CASE("thm1 margin on random graphs") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    MetricGraph g = sample(seed, static_cast<int>(seed % 3));
    if (diameter(g) >= total_length(g) * (1 - 1e-12)) continue;
    const BoundReport r = check_thm1(g);
    CHECK(r.verdict == Verdict::Holds);
    CHECK(r.margin > 0);
  }
}

TEST_CASE("star values decrease in n towards omega_star") {
  for (auto [L, D] : {std::pair{1.0, 0.5}, {2.0, 1.3}, {1.0, 0.8}}) {
    const double limit = omega_star(L, D).omega_squared;
    double prev = INFINITY;
    for (int n = static_cast<int>(std::floor(L / D)) + 1; n <= 30; ++n) {
      const double mu = eigenvalues(make_star({L, D, n}), 1)[0];
      CHECK(mu < prev);
      CHECK(mu > limit);
      prev = mu;
    }
  }
}

#include <algorithm>
#include <cmath>
#include <charconv>
#include <numbers>

#include "doctest.h"
#include "qglab/families.hpp"
#include "qglab/spectral.hpp"
#include "qglab/verify.hpp"

using namespace qglab;
using std::numbers::pi;

namespace {

std::string shortest(double x) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::vector<double> sorted_lengths(const MetricGraph& g) {
  std::vector<double> out;
  for (const Edge& e : g.edges()) out.push_back(e.length);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("star edge lengths") {
  MetricGraph s = make_star({1.0, 0.5, 3});
  CHECK(s.edge_count() == 4);
  for (double l : sorted_lengths(s)) CHECK(l == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(s.is_dirichlet(s.vertex_index("v0")));

  StarParams p{2.0, 1.0, 4};
  CHECK(p.dirichlet_edge() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(p.pendant_edge() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(shorter_edges_ok(p));
}

TEST_CASE("star parameter errors") {
  CHECK_THROWS_AS(make_star({1.0, 1.0, 2}), ParameterError);
  CHECK_THROWS_AS(make_star({1.0, 0.3, 3}), ParameterError);
  CHECK_THROWS_AS(make_star({1.0, 1.2, 3}), ParameterError);
  CHECK_THROWS_AS(make_star({1.0, 0.5, 1}), ParameterError);
}

TEST_CASE("dumbbell constructions") {
  MetricGraph sym = make_star_dumbbell({1.0, 0.1, 0.1, 2});
  CHECK(sym.edge_count() == 5);
  CHECK(canonical_form(sym) == canonical_form(make_star_dumbbell({1.0, 0.1, 0.1, 2})));
  MetricGraph bare = make_star_dumbbell({1.0, 0.0, 0.0, 1});
  CHECK(bare.edge_count() == 1);
  CHECK(total_length(bare) == 1.0);
  CHECK(total_length(make_star_dumbbell({1.0, 0.3, 0.1, 3})) == doctest::Approx(2.2).epsilon(1e-15));
  CHECK_THROWS_AS(make_star_dumbbell({0.0, 0.1, 0.1, 2}), ParameterError);
}

TEST_CASE("Dn geometry") {
  MetricGraph d = make_dn(2.0, 1.0, 3);
  std::vector<double> ls = sorted_lengths(d);
  REQUIRE(ls.size() == 7);
  for (int i = 0; i < 6; ++i) CHECK(ls[i] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(ls[6] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(diameter(make_dn(2.0, 1.0, 5)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(total_length(make_dn(3.0, 1.0, 4)) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK_FALSE(d.has_dirichlet());
}

TEST_CASE("Dn equals two half stars sharing their tip") {
  for (int n : {3, 5, 8}) {
    CAPTURE(n);
    MetricGraph s = make_star({1.0, 0.5, n});
    std::string text = "vertex tip\n";
    auto name = [&](const char* side, std::size_t v) {
      return s.is_dirichlet(v) ? std::string("tip") : side + s.vertex(v).id;
    };
    for (const char* side : {"a", "b"})
      for (std::size_t v = 0; v < s.vertex_count(); ++v)
        if (!s.is_dirichlet(v)) text += "vertex " + name(side, v) + "\n";
    for (const char* side : {"a", "b"})
      for (const Edge& e : s.edges())
        text += "edge " + std::string(side) + e.id + " " + name(side, e.u) + " " + name(side, e.v) + " " +
                shortest(e.length) + "\n";
    CHECK(canonical_form(make_dn(2.0, 1.0, n), true) == canonical_form(parse_graph(text), true));
  }
}

TEST_CASE("Tn constructions") {
  MetricGraph t = make_tn(3.0, 1.0, 3, 4);
  CHECK(betti(t) == 0);
  CHECK(diameter(t) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(total_length(t) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(canonical_form(make_tn(2.0, 1.0, 2, 3), true) == canonical_form(make_dn(2.0, 1.0, 3), true));
  CHECK_THROWS_AS(make_tn(3.0, 1.0, 1, 4), ParameterError);
}

TEST_CASE("basic families") {
  MetricGraph p = make_path(1.0);
  CHECK(p.edge_count() == 1);
  CHECK(diameter(p) == 1.0);
  for (double l : sorted_lengths(make_equilateral_star(3.0, 3))) CHECK(l == doctest::Approx(1.0));
  MetricGraph f = make_cycle_with_pendants(0.5, 0.7);
  CHECK(f.edge_count() == 8);
  CHECK(f.vertex_count() == 8);
  CHECK(betti(f) == 1);
  CHECK(make_basic(BasicKind::Tadpole, {1.0, 0.5}).edge_count() == 2);
  CHECK_THROWS(make_path(-1.0));
  CHECK(make_family("Dn", {{"L", 2.0}, {"D", 1.0}, {"n", 3.0}}).edge_count() == 7);
  CHECK_THROWS_AS(make_family("nosuch", {}), std::invalid_argument);
  CHECK_THROWS_AS(make_family("star", {{"L", 1.0}, {"D", 0.5}}), std::invalid_argument);
}

TEST_CASE("star secular closed form") {
  StarParams p{1.0, 0.5, 3};
  CHECK(star_secular(p, 2.0 * pi / 3.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(star_secular_root(p) == doctest::Approx(2.0943951023931954923).epsilon(1e-13));
  // mpmath oracle for S(2, 1, 4).
  CHECK(star_secular_root({2.0, 1.0, 4}) == doctest::Approx(0.9652516631899265802).epsilon(1e-13));
}

TEST_CASE("star secular root agrees with the generic solver") {
  for (auto [L, D, n] : {std::tuple{1.0, 0.5, 3}, {2.0, 1.0, 4}, {1.0, 0.3, 5}, {1.0, 0.9, 2}, {3.0, 1.0, 40}}) {
    CAPTURE(L);
    CAPTURE(D);
    CAPTURE(n);
    const double k = star_secular_root({L, D, n});
    const double generic = eigenvalues(make_star({L, D, n}), 1)[0];
    CHECK(k * k == doctest::Approx(generic).epsilon(1e-11));
  }
}

TEST_CASE("star root approaches the limit equation from above") {
  // Limit: cos(kD) = k (L - D) sin(kD), L = 1, D = 0.5.
  auto limit = [](double k) { return std::cos(0.5 * k) - 0.5 * k * std::sin(0.5 * k); };
  double lo = 0.1, hi = pi;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (limit(mid) > 0 ? lo : hi) = mid;
  }
  double prev = 1e9;
  for (int n : {3, 6, 12, 48, 400}) {
    const double k = star_secular_root({1.0, 0.5, n});
    CHECK(k > lo);
    CHECK(k < prev);
    prev = k;
  }
  CHECK(prev - lo < 1e-2);
}

TEST_CASE("star invariants on random parameters") {
  Rng rng(2024);
  for (int i = 0; i < 200; ++i) {
    const double L = rng.uniform(0.5, 3.0);
    const int n = rng.integer(2, 12);
    const double D = rng.uniform(L / n * 1.01, L * 0.999);
    StarParams p{L, D, n};
    MetricGraph s = make_star(p);
    CHECK(std::abs(total_length(s) - L) < 1e-12);
    CHECK(std::abs(dirichlet_eccentricity(s) - D) < 1e-12);
    if (shorter_edges_ok(p)) CHECK(std::abs(diameter(s) - D) < 1e-12);
  }
}

#include <cmath>

#include "doctest.h"
#include "qglab/families.hpp"
#include "qglab/graph.hpp"
#include "qglab/verify.hpp"

using namespace qglab;

TEST_CASE("parse single edge and loop") {
  MetricGraph g = parse_graph("vertex a\nvertex b\nedge e a b 1.0");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.edge(0).length == 1.0);

  MetricGraph loop = parse_graph("vertex a\nedge e a a 2.0");
  CHECK(loop.edge(0).is_loop());
  CHECK(loop.degree(0) == 2);
  CHECK(betti(loop) == 1);
}

TEST_CASE("parse comments and dirichlet") {
  MetricGraph g = parse_graph("# header\nvertex a dirichlet  # tip\nvertex b\n\nedge e a b 0.5\n");
  CHECK(g.is_dirichlet(0));
  CHECK_FALSE(g.is_dirichlet(1));
  CHECK(g.dirichlet_vertices() == std::vector<std::size_t>{0});
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("vertex a\nvertex b\nedge e a b -1") == 3);
  CHECK(line_of("vertex a\nvertex b\nedge e a b 0") == 3);
  CHECK(line_of("vertex a\nvertex a") == 2);
  CHECK(line_of("vertex a\nbogus x") == 2);
  CHECK(line_of("vertex a\nvertex b\nedge e a c 1") == 3);
  CHECK(line_of("vertex a\nvertex b\nedge e a b abc") == 3);
  CHECK_THROWS_AS(parse_graph("vertex a\nvertex b\nvertex c\nvertex d\nedge e a b 1\nedge f c d 1"), GraphError);
  CHECK_THROWS_WITH_AS(parse_graph("vertex a\nvertex b\nvertex c\nvertex d\nedge e a b 1\nedge f c d 1"),
                       doctest::Contains("disconnected"), GraphError);
}

TEST_CASE("mgf round trip") {
  MetricGraph g = make_star({1.0, 0.5, 3});
  MetricGraph h = parse_graph(to_mgf(g));
  CHECK(to_mgf(h) == to_mgf(g));
  CHECK(h.is_dirichlet(h.vertex_index("v0")));
  for (std::size_t e = 0; e < g.edge_count(); ++e) CHECK(h.edge(e).length == g.edge(e).length);
}

TEST_CASE("total length and betti") {
  CHECK(total_length(make_path(1.0)) == 1.0);
  CHECK(total_length(make_star({1.0, 0.5, 3})) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(total_length(make_tadpole(2.0, 0.5)) == 2.5);
  CHECK(betti(make_star({1.0, 0.5, 3})) == 0);
  CHECK(betti(make_cycle_with_pendants(1.0, 0.5)) == 1);
}

TEST_CASE("distance examples") {
  MetricGraph edge3 = parse_graph("vertex a\nvertex b\nedge e a b 3");
  CHECK(distance(edge3, {0, 1.2}, {0, 1.2}) == 0.0);
  CHECK(distance(edge3, {0, 0.0}, {0, 3.0}) == 3.0);
  MetricGraph loop = make_loop(2.0);
  CHECK(distance(loop, {0, 0.3}, {0, 1.3}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(distance(loop, {0, 0.1}, {0, 1.9}) == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("diameter examples") {
  CHECK(diameter(make_path(1.7)) == doctest::Approx(1.7));
  CHECK(diameter(make_loop(3.0)) == doctest::Approx(1.5));
  CHECK(diameter(make_star({1.0, 0.5, 3})) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(diameter(make_star({2.0, 1.0, 4})) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(diameter(make_dn(2.0, 1.0, 5)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("dirichlet eccentricity") {
  MetricGraph interval = parse_graph("vertex a dirichlet\nvertex b\nedge e a b 0.8");
  CHECK(dirichlet_eccentricity(interval) == doctest::Approx(0.8));
  CHECK(dirichlet_eccentricity(make_star({2.0, 1.0, 4})) == doctest::Approx(1.0).epsilon(1e-14));
  MetricGraph loop = parse_graph("vertex a dirichlet\nedge e a a 2.0");
  CHECK(dirichlet_eccentricity(loop) == doctest::Approx(1.0));
  CHECK_THROWS_AS(dirichlet_eccentricity(make_path(1.0)), GraphError);
}

TEST_CASE("max loop length") {
  CHECK(max_loop_length(make_star({1.0, 0.5, 3})) == 0.0);
  MetricGraph square = parse_graph(
      "vertex a\nvertex b\nvertex c\nvertex d\n"
      "edge e1 a b 0.5\nedge e2 b c 0.5\nedge e3 c d 0.5\nedge e4 d a 0.5");
  CHECK(max_loop_length(square) == doctest::Approx(2.0));
  CHECK(max_loop_length(make_tadpole(1.0, 1.0)) == doctest::Approx(1.0));
  CHECK(suppress_degree_two(square).edge_count() == 1);
}

TEST_CASE("with_dirichlet and with_edge_length copy") {
  MetricGraph g = make_path(1.0);
  std::vector<std::size_t> d{0};
  MetricGraph h = g.with_dirichlet(d);
  CHECK(h.is_dirichlet(0));
  CHECK_FALSE(g.has_dirichlet());
  CHECK(h.with_all_natural().has_dirichlet() == false);
  CHECK(g.with_edge_length(0, 2.0).edge(0).length == 2.0);
  CHECK_THROWS_AS(g.with_edge_length(0, -1.0), GraphError);
}

TEST_CASE("id charset") {
  CHECK(is_valid_id("v0"));
  CHECK(is_valid_id("a_1"));
  CHECK_FALSE(is_valid_id(""));
  CHECK_FALSE(is_valid_id("a-b"));
  CHECK_FALSE(is_valid_id("a b"));
}

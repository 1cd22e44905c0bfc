#include <cmath>

#include "doctest.h"
#include "qglab/families.hpp"
#include "qglab/spectral.hpp"
#include "qglab/surgery.hpp"
#include "qglab/verify.hpp"

using namespace qglab;

TEST_CASE("glue merges vertices and keeps length") {
  MetricGraph p = make_path(2.0);
  MetricGraph loop = glue(p, 0, 1);
  CHECK(loop.vertex_count() == 1);
  CHECK(betti(loop) == 1);
  CHECK(total_length(loop) == 2.0);
  CHECK(eigenvalues(loop, 2)[1] >= eigenvalues(p, 2)[1]);
  MetricGraph d = p.with_dirichlet(std::vector<std::size_t>{1});
  CHECK(glue(d, 0, 1).has_dirichlet());
}

TEST_CASE("subdivide and cut") {
  MetricGraph loop = make_loop(2.0);
  MetricGraph sub = subdivide(loop, {0, 0.5});
  CHECK(sub.vertex_count() == 2);
  CHECK(total_length(sub) == doctest::Approx(2.0));
  MetricGraph opened = cut(loop, {0, 1.0});
  CHECK(betti(opened) == 0);
  CHECK(diameter(opened) == doctest::Approx(2.0));
  CHECK_THROWS_AS(cut(make_path(1.0), {0, 0.5}), SurgeryError);
  CHECK_THROWS_AS(cut(loop, {0, 0.0}), SurgeryError);
}

TEST_CASE("cut loop midpoints keeps L and D when the loop is short") {
  MetricGraph t = make_tadpole(1.0, 1.0);
  MetricGraph c = cut_loop_midpoints(t);
  CHECK(betti(c) == 0);
  CHECK(total_length(c) == doctest::Approx(2.0));
  CHECK(diameter(c) == doctest::Approx(diameter(t)));
}

TEST_CASE("lengthen changes one edge") {
  MetricGraph s = make_star({1.0, 0.5, 3});
  MetricGraph l = lengthen(s, 1, 0.1);
  CHECK(l.edge(1).length == doctest::Approx(s.edge(1).length + 0.1));
  CHECK(eigenvalues(l, 1)[0] < eigenvalues(s, 1)[0]);
  CHECK_THROWS(lengthen(s, 1, -1.0));
}

TEST_CASE("split at points") {
  MetricGraph p = make_path(1.0);
  std::vector<GraphPoint> pts{{0, 0.25}, {0, 0.5}};
  auto pieces = split_at_points(p, pts, true);
  REQUIRE(pieces.size() == 3);
  CHECK(total_length(pieces[0]) == doctest::Approx(0.25));
  CHECK(total_length(pieces[2]) == doctest::Approx(0.5));
  CHECK(pieces[1].dirichlet_vertices().size() == 2);
}

TEST_CASE("transplant preserves length and lowers the ground state") {
  // Dirichlet tip v0, centre c, pendants; move one pendant to the far end of another.
  MetricGraph s = make_star({1.0, 0.5, 3});
  TransplantPlan plan;
  plan.delete_edges = {s.edge_index("e3")};
  plan.vertex = s.vertex_index("p1");
  plan.pendants = {s.edge(s.edge_index("e3")).length};
  MetricGraph t = transplant(s, plan);
  CHECK(total_length(t) == doctest::Approx(1.0));
  CHECK(eigenvalues(t, 1)[0] < eigenvalues(s, 1)[0]);
  TransplantPlan short_plan = plan;
  short_plan.pendants = {0.01};
  CHECK_THROWS_AS(transplant(s, short_plan), SurgeryError);
}

TEST_CASE("cut vertex") {
  MetricGraph loop = make_loop(1.0);
  std::vector<EdgeEnd> part{{0, 0}};
  MetricGraph p = cut_vertex(loop, 0, part);
  CHECK(p.vertex_count() == 2);
  CHECK(diameter(p) == doctest::Approx(1.0));
  CHECK_THROWS_AS(cut_vertex(loop, 0, std::vector<EdgeEnd>{}), SurgeryError);
}

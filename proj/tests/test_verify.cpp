#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qglab/families.hpp"
#include "qglab/verify.hpp"

using namespace qglab;
using std::numbers::pi;

TEST_CASE("rng stream is fixed") {
  Rng a(7), b(7);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  Rng r(1);
  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const int n = r.integer(2, 6);
    CHECK(n >= 2);
    CHECK(n <= 6);
  }
}

TEST_CASE("random graph respects its parameters") {
  for (int beta = 0; beta <= 2; ++beta)
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      RandomGraphSpec s;
      s.seed = seed;
      s.beta = beta;
      s.dirichlet_leaves = beta == 0 ? 1 : 0;
      MetricGraph g = random_graph(s);
      CHECK(betti(g) == static_cast<std::size_t>(beta));
      CHECK(g.edge_count() <= 6);
      CHECK(g.min_edge_length() >= 0.2);
      CHECK(to_mgf(random_graph(s)) == to_mgf(g));
      if (beta == 0) CHECK(g.dirichlet_vertices().size() == 1);
    }
}

TEST_CASE("thm1 on Dn") {
  BoundReport r = check_thm1(make_dn(2, 1, 8));
  CHECK(r.verdict == Verdict::Holds);
  CHECK(r.bound == doctest::Approx(2.9606955375798681689).epsilon(1e-12));
  CHECK(r.margin > 0);
  CHECK_THROWS_AS(check_thm1(make_path(1)), ParameterError);
}

TEST_CASE("thm2 gating") {
  BoundReport tn = check_thm2(make_tn(3, 1, 3, 4), 3);
  CHECK(tn.verdict == Verdict::Holds);
  CHECK(check_thm2(make_equilateral_star(3, 3), 4).verdict == Verdict::HypothesisNotMet);
  CHECK(check_thm2(make_tadpole(2, 0.5), 2).verdict == Verdict::HypothesisNotMet);
}

TEST_CASE("nicaise and friedlander equality cases") {
  BoundReport n = check_nicaise(make_path(1));
  CHECK(n.verdict == Verdict::Holds);
  CHECK(std::abs(n.margin) < 1e-9);
  for (int k = 2; k <= 5; ++k) {
    BoundReport f = check_friedlander(make_equilateral_star(1, k), k);
    CHECK(f.verdict == Verdict::Holds);
    CHECK(std::abs(f.margin) < 1e-8);
  }
}

TEST_CASE("convergence table") {
  Table t = check_convergence_Dn(2, 1, {3, 4, 5, 9});
  CHECK(t.verdict == Verdict::Holds);
  REQUIRE(t.rows.size() == 4);
  for (const auto& row : t.rows) CHECK(std::abs(row[1] - row[2]) < 1e-9);
  CHECK(t.rows[0][1] > t.rows[1][1]);
}

TEST_CASE("star monotonicity and witness") {
  CHECK(star_monotonicity_n(1, 0.5, {3, 4, 5, 6}).verdict == Verdict::Holds);
  CHECK(star_monotonicity_D(1, 4, {0.3, 0.4, 0.5, 0.6}).verdict == Verdict::Holds);
  Table w = star_longer_witness(1, 1.2, 0.5, 3);
  CHECK(w.verdict == Verdict::Holds);
}

TEST_CASE("dumbbell balance") {
  Table t = check_dumbbell_balance(1, 0.6, 3, 13);
  CHECK(t.verdict == Verdict::Holds);
  std::size_t best = 0;
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.rows[i][1] < t.rows[best][1]) best = i;
  CHECK(t.rows[best][0] == doctest::Approx(0.3));
}

TEST_CASE("symmetrisation") {
  BoundReport r = check_symmetrisation({1, 0.5, 3}, {1.4, 0.6, 3});
  CHECK(r.verdict == Verdict::Holds);
}

TEST_CASE("key lemma") {
  MetricGraph interval = parse_graph("vertex a dirichlet\nvertex b\nedge e a b 1");
  BoundReport i = check_key_lemma(interval);
  CHECK(i.verdict == Verdict::Holds);
  CHECK(i.bound == doctest::Approx(pi * pi / 4));
  BoundReport s = check_key_lemma(make_star({1, 0.5, 3}));
  CHECK(s.verdict == Verdict::Holds);
}

TEST_CASE("nodal count and partition") {
  RandomGraphSpec s;
  s.seed = 11;
  s.jitter = true;
  int checked = 0;
  for (std::uint64_t seed = 1; seed < 40 && checked < 5; ++seed) {
    s.seed = seed;
    BoundReport r = check_nodal_count(random_graph(s), 3);
    if (r.verdict == Verdict::HypothesisNotMet) continue;
    CHECK(r.verdict == Verdict::Holds);
    ++checked;
  }
  CHECK(checked == 5);
  MetricGraph p = make_path(1);
  CHECK(check_partition(p, {{0, 1.0 / 3}, {0, 2.0 / 3}}).verdict == Verdict::Holds);
}

TEST_CASE("hadamard check on a tree") {
  RandomGraphSpec s;
  s.seed = 3;
  MetricGraph g = random_graph(s);
  BoundReport r = check_hadamard(g, 0);
  CHECK(r.verdict != Verdict::Fails);
}

TEST_CASE("glue, lengthen and transplant checks") {
  MetricGraph s = make_star({1, 0.5, 3});
  CHECK(check_glue(s.with_all_natural(), 1, 2).verdict == Verdict::Holds);
  BoundReport l = check_lengthen(s, 0, 0.05);
  CHECK(l.verdict == Verdict::Holds);
  CHECK(l.margin > 0);
  BoundReport t = check_transplant(s, {s.edge_index("e3")}, s.vertex_index("p1"));
  CHECK(t.verdict == Verdict::Holds);
}

TEST_CASE("conjecture gating and exploration") {
  CHECK(check_conjecture(make_loop(1), 2).verdict != Verdict::Fails);
  CHECK(check_conjecture(make_path(1), 3).verdict == Verdict::HypothesisNotMet);
  RandomGraphSpec s;
  s.seed = 5;
  for (const BoundReport& r : explore_conjecture(s, 2, 5)) CHECK(r.verdict != Verdict::Fails);
}

TEST_CASE("discrepancy report") {
  auto tables = discrepancy_report();
  REQUIRE(tables.size() == 3);
  const Table& fr = tables[0];
  REQUIRE(fr.rows.size() == 4);
  for (const auto& row : fr.rows) {
    const double k = row[0];
    CHECK(row[1] == doctest::Approx(pi * pi * k * k / 4).epsilon(1e-10));
  }
  auto again = discrepancy_report();
  for (std::size_t t = 0; t < tables.size(); ++t) CHECK(again[t].rows == tables[t].rows);
}

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qglab/bounds.hpp"
#include "qglab/verify.hpp"

using namespace qglab;
using std::numbers::pi;

namespace {

// mpmath, 40 digits (tests/oracles/transcendental_roots.py).
constexpr double kOmegaThm1_2_1 = 1.720667178038759525;
constexpr double kWentzell_1_9 = 0.32728467296403824307;
constexpr double kConj_3_1_4 = 2.1537479726236073172;
constexpr double kThm2SmallD = 2000.6668778402283194;

double value_of(const std::vector<BoundConstant>& bs, const std::string& label, const std::string& variant) {
  for (const BoundConstant& b : bs)
    if (b.label == label && b.variant == variant) return b.value;
  FAIL("missing constant " << label << "/" << variant);
  return 0.0;
}

}  // namespace

TEST_CASE("gamma branches") {
  CHECK(gamma(3, 1, 3, 0) == doctest::Approx(0.5));
  CHECK(gamma(3, 1, 2, 5) == doctest::Approx(1.0));
  CHECK(gamma(1, 1, 2, 0) == doctest::Approx(0.0));
}

TEST_CASE("frozen transcendental roots") {
  for (RootMethod m : {RootMethod::Bisection, RootMethod::GoldenSection}) {
    CHECK(omega_thm1(2, 1, m).omega == doctest::Approx(kOmegaThm1_2_1).epsilon(1e-12));
    CHECK(omega_thm2(3, 1, 3, 0, m).omega == doctest::Approx(kOmegaThm1_2_1).epsilon(1e-12));
    CHECK(omega_star(1, 0.5, m).omega == doctest::Approx(kOmegaThm1_2_1).epsilon(1e-12));
    CHECK(wentzell_eigenvalue(1, 9, m).omega == doctest::Approx(kWentzell_1_9).epsilon(1e-12));
    CHECK(omega_conjecture(3, 1, 4, m).omega == doctest::Approx(kConj_3_1_4).epsilon(1e-12));
  }
  CHECK(omega_thm2(3, 1e-3, 3, 0).omega_squared == doctest::Approx(kThm2SmallD).epsilon(1e-10));
}

TEST_CASE("limiting cases") {
  CHECK(omega_star(1, 1).omega == doctest::Approx(pi / 2).epsilon(1e-14));
  CHECK(wentzell_eigenvalue(0.8, 0).omega == doctest::Approx(pi / 1.6).epsilon(1e-14));
  CHECK(omega_thm1(1, 1 - 1e-9).omega == doctest::Approx(pi).epsilon(1e-6));
  CHECK(omega_conjecture(2.6, 0.7, 2).omega == doctest::Approx(omega_thm1(2.6, 0.7).omega).epsilon(1e-14));
  CHECK(omega_conjecture(3, 1, 4).omega > omega_conjecture(3, 1, 3).omega);
  const double D = 1.0, m = 9.0;
  CHECK(wentzell_eigenvalue(D, m).omega_squared == doctest::Approx(1.0 / (D * m + D * D / 3.0)).epsilon(2e-3));
}

TEST_CASE("parameter errors") {
  CHECK_THROWS_AS(omega_thm1(1, 1), ParameterError);
  CHECK_THROWS_AS(omega_thm1(1, 2), ParameterError);
  CHECK_THROWS_AS(omega_thm2(1, 1.5, 2, 0), ParameterError);
  CHECK_THROWS_AS(omega_conjecture(1, 1, 2), ParameterError);
}

TEST_CASE("small D leading order") {
  const double D = 1e-3, g = gamma(3, D, 3, 0);
  const double w2 = omega_thm2(3, D, 3, 0).omega_squared;
  CHECK(w2 == doctest::Approx(2 / (D * g)).epsilon(1e-3));
  CHECK(w2 >= 2 / (D * g + D * D / 2));
  CHECK(w2 <= 2 / (D * g - D * D / 6));
}

TEST_CASE("closed form constants") {
  CHECK(value_of(closed_form_bounds("nicaise", {{"L", 1}}), "lower", "stated") == doctest::Approx(pi * pi));
  auto neig2 = closed_form_bounds("neig2", {{"L", 2}, {"D", 1}});
  CHECK(value_of(neig2, "lower", "stated") == doctest::Approx(0.5));
  CHECK(value_of(neig2, "upper", "stated") == doctest::Approx(6.0));
  auto prop = closed_form_bounds("prop14", {{"L", 1}, {"D", 0.5}});
  CHECK(value_of(prop, "lower", "printed") == doctest::Approx(4 / 0.375));
  CHECK(value_of(prop, "lower", "printed") > omega_star(1, 0.5).omega_squared);
  auto fr = closed_form_bounds("friedlander", {{"L", 3}, {"k", 3}});
  CHECK(value_of(fr, "lower", "printed") == doctest::Approx(4 * pi * pi / 9));
  CHECK(value_of(fr, "lower", "corrected-candidate") == doctest::Approx(pi * pi / 4));
  auto w = closed_form_bounds("wentzell", {{"L", 1}, {"D", 0.5}});
  CHECK(value_of(w, "omega_squared", "corrected-candidate") ==
        doctest::Approx(omega_star(1, 0.5).omega_squared).epsilon(1e-13));
  CHECK_THROWS(closed_form_bounds("nosuch", {}));
}

TEST_CASE("residual and smallest root on random parameters") {
  Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    const double L = rng.uniform(0.1, 10.0);
    const double D = rng.uniform(0.01, 0.99) * L;
    for (const OmegaResult& r : {omega_thm1(L, D), omega_star(L, D), omega_thm2(L, D, 2, 0)}) {
      CHECK(std::abs(omega_function(r.theta, r.mass, r.omega)) <= 1e-12 * (1 + r.omega));
      CHECK(is_smallest_root(r, 512));
    }
  }
}

TEST_CASE("substitution identity") {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const double L = rng.uniform(0.1, 10.0);
    const double D = rng.uniform(0.01, 0.99) * L;
    CHECK(std::abs(omega_star(L / 2, D / 2).omega - omega_thm1(L, D).omega) <= 1e-12 * omega_thm1(L, D).omega);
  }
}

TEST_CASE("omega_star decreases in D with the closed form derivative") {
  for (double D : {0.1, 0.3, 0.5, 0.8}) {
    const double h = 1e-6;
    const double fd = (omega_star(1, D + h).omega - omega_star(1, D - h).omega) / (2 * h);
    CHECK(fd < 0);
    CHECK(omega_star_dD(1, D) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("two sided bound for the thm1 root") {
  for (int i = 1; i <= 50; ++i)
    for (int j = 1; j <= 50; ++j) {
      const double L = 10.0 * i / 50, D = L * j / 51.0;
      const double w2 = omega_thm1(L, D).omega_squared;
      CHECK(1 / (L * D) < w2);
      CHECK(w2 < 12 / (L * D));
    }
}

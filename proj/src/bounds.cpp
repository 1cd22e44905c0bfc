#include "qglab/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace qglab {
namespace {

constexpr double kPi = std::numbers::pi;

double param(const std::map<std::string, double>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw ParameterError("missing parameter '" + key + "'");
  return it->second;
}

void require(bool ok, const char* what) {
  if (!ok) throw ParameterError(what);
}

double bisect(double theta, double c, double lo, double hi) {
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (omega_function(theta, c, mid) > 0.0) lo = mid;
    else hi = mid;
  }
  return std::abs(omega_function(theta, c, lo)) < std::abs(omega_function(theta, c, hi)) ? lo : hi;
}

// Golden-section minimization of |F| over the bracket; |F| is unimodal since
// F is monotone there.
double golden(double theta, double c, double a, double b) {
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  auto f = [&](double w) { return std::abs(omega_function(theta, c, w)); };
  double x1 = b - r * (b - a);
  double x2 = a + r * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 400 && x1 < x2; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - r * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + r * (b - a);
      f2 = f(x2);
    }
  }
  return f1 < f2 ? x1 : x2;
}

}  // namespace

std::string to_string(OmegaTag tag) {
  switch (tag) {
    case OmegaTag::Thm1: return "thm1";
    case OmegaTag::Thm2: return "thm2";
    case OmegaTag::Star: return "star";
    case OmegaTag::Wentzell: return "wentzell";
    case OmegaTag::Conjecture: return "conjecture";
  }
  return "unknown";
}

double omega_function(double theta, double c, double omega) {
  return std::cos(theta * omega) - c * omega * std::sin(theta * omega);
}

OmegaResult solve_omega(double theta, double c, OmegaTag tag, RootMethod method) {
  require(theta > 0.0 && std::isfinite(theta), "theta must be positive");
  require(c >= 0.0 && std::isfinite(c), "mass coefficient must be nonnegative");
  OmegaResult r;
  r.tag = tag;
  r.theta = theta;
  r.mass = c;
  r.method = method;
  r.bracket_lo = 0.0;
  r.bracket_hi = kPi / (2.0 * theta);
  if (c == 0.0) r.omega = r.bracket_hi;
  else if (method == RootMethod::Bisection) r.omega = bisect(theta, c, r.bracket_lo, r.bracket_hi);
  else r.omega = golden(theta, c, r.bracket_lo, r.bracket_hi);
  r.omega_squared = r.omega * r.omega;
  r.residual = std::abs(omega_function(theta, c, r.omega));
  return r;
}

bool is_smallest_root(const OmegaResult& r, int samples) {
  const double end = r.omega - 1e-9;
  for (int i = 1; i <= samples; ++i) {
    const double w = end * i / samples;
    if (w <= 0.0) continue;
    if (!(omega_function(r.theta, r.mass, w) > 0.0)) return false;
  }
  return true;
}

double gamma(double L, double D, double k, double beta) {
  if (k > beta) return L / (k - beta) - D / 2.0;
  return L / k - D / 2.0;
}

OmegaResult omega_thm1(double L, double D, RootMethod method) {
  require(D > 0.0 && D < L, "needs 0 < D < L");
  return solve_omega(D / 2.0, (L - D) / 2.0, OmegaTag::Thm1, method);
}

OmegaResult omega_thm2(double L, double D, double k, double beta, RootMethod method) {
  require(D > 0.0 && D < L, "needs 0 < D < L");
  require(k >= 1.0 && beta >= 0.0, "needs k >= 1 and beta >= 0");
  const double g = gamma(L, D, k, beta);
  require(g > 0.0, "gamma must be positive");
  return solve_omega(D / 2.0, g, OmegaTag::Thm2, method);
}

OmegaResult omega_star(double L, double D, RootMethod method) {
  require(D > 0.0 && D <= L, "needs 0 < D <= L");
  return solve_omega(D, L - D, OmegaTag::Star, method);
}

OmegaResult wentzell_eigenvalue(double D, double m, RootMethod method) {
  require(D > 0.0, "needs D > 0");
  require(m >= 0.0, "needs m >= 0");
  return solve_omega(D, m, OmegaTag::Wentzell, method);
}

OmegaResult omega_conjecture(double L, double D, double k, RootMethod method) {
  require(D > 0.0 && L > 0.0 && k >= 1.0, "needs positive L, D and k >= 1");
  require(L / k > D / 2.0, "needs L/k > D/2");
  return solve_omega(D / 2.0, L / k - D / 2.0, OmegaTag::Conjecture, method);
}

double omega_star_dD(double L, double D) {
  const double w = omega_star(L, D).omega;
  const double m = L - D;
  return -w * w * w * m * m / (L + w * w * m * m * D);
}

std::vector<std::string> bound_tags() { return {"nicaise", "friedlander", "neig2", "neigk", "prop14", "wentzell"}; }

std::vector<BoundConstant> closed_form_bounds(const std::string& tag, const std::map<std::string, double>& p) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (tag == "nicaise") {
    const double L = param(p, "L");
    require(L > 0.0, "needs L > 0");
    return {{"lower", "stated", kPi * kPi / (L * L)}};
  }
  if (tag == "friedlander") {
    const double L = param(p, "L");
    const double k = param(p, "k");
    require(L > 0.0 && k >= 1.0, "needs L > 0 and k >= 1");
    return {{"lower", "printed", kPi * kPi * (k - 1) * (k - 1) / (L * L)},
            {"lower", "corrected-candidate", kPi * kPi * k * k / (4.0 * L * L)}};
  }
  if (tag == "neig2") {
    const double L = param(p, "L");
    const double D = param(p, "D");
    require(L > 0.0 && D > 0.0, "needs positive L and D");
    return {{"lower", "stated", 1.0 / (L * D)}, {"upper", "stated", 12.0 / (L * D)}};
  }
  if (tag == "neigk") {
    const double L = param(p, "L");
    const double D = param(p, "D");
    const double k = param(p, "k");
    const double beta = p.count("beta") ? p.at("beta") : 0.0;
    const double g = gamma(L, D, k, beta);
    const double upper = D * g > D * D / 6.0 ? 2.0 / (D * g - D * D / 6.0) : nan;
    return {{"gamma", "stated", g}, {"lower", "stated", 2.0 / (D * g + D * D / 2.0)}, {"upper", "stated", upper}};
  }
  if (tag == "prop14") {
    const double L = param(p, "L");
    const double D = param(p, "D");
    require(L > 0.0 && D > 0.0 && D <= L, "needs 0 < D <= L");
    return {{"lower", "printed", 4.0 / (L * D - D * D / 2.0)},
            {"upper", "printed", 48.0 / (3.0 * L * D - 2.0 * D * D)},
            {"lower", "corrected-candidate", 1.0 / (L * D - D * D / 2.0)},
            {"upper", "corrected-candidate", 12.0 / (3.0 * L * D - 2.0 * D * D)}};
  }
  if (tag == "wentzell") {
    const double L = param(p, "L");
    const double D = param(p, "D");
    require(D > 0.0 && D <= L, "needs 0 < D <= L");
    return {{"omega_squared", "printed", wentzell_eigenvalue(D, (L - D) / 2.0).omega_squared},
            {"omega_squared", "corrected-candidate", wentzell_eigenvalue(D, L - D).omega_squared}};
  }
  throw ParameterError("unknown bound tag '" + tag + "'");
}

}  // namespace qglab

#pragma once

#include <map>
#include <string>
#include <vector>

#include "qglab/families.hpp"

namespace qglab {

enum class OmegaTag { Thm1, Thm2, Star, Wentzell, Conjecture };
std::string to_string(OmegaTag tag);

enum class RootMethod { Bisection, GoldenSection };

/// Smallest positive root of F(w) = cos(theta w) - c w sin(theta w).
struct OmegaResult {
  double omega = 0.0;
  double omega_squared = 0.0;
  OmegaTag tag = OmegaTag::Thm1;
  double theta = 0.0;
  double mass = 0.0;  // the coefficient c
  double residual = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  RootMethod method = RootMethod::Bisection;
};

double omega_function(double theta, double c, double omega);

/// F is strictly decreasing on (0, pi/(2 theta)] with F(0+) = 1 and
/// F(pi/(2 theta)) = -c pi/(2 theta), so the root there is the smallest one.
OmegaResult solve_omega(double theta, double c, OmegaTag tag, RootMethod method = RootMethod::Bisection);

/// True when F has no sign change on (0, omega - 1e-9), checked on a grid.
bool is_smallest_root(const OmegaResult& r, int samples = 4096);

/// L/(k - beta) - D/2 if k > beta, else L/k - D/2. May be nonpositive.
double gamma(double L, double D, double k, double beta);

OmegaResult omega_thm1(double L, double D, RootMethod method = RootMethod::Bisection);
OmegaResult omega_thm2(double L, double D, double k, double beta, RootMethod method = RootMethod::Bisection);
OmegaResult omega_star(double L, double D, RootMethod method = RootMethod::Bisection);
/// Point mass m at the end x = D of a Dirichlet-Neumann interval [0, D].
OmegaResult wentzell_eigenvalue(double D, double m, RootMethod method = RootMethod::Bisection);
OmegaResult omega_conjecture(double L, double D, double k, RootMethod method = RootMethod::Bisection);

/// d omega_star / dD at fixed L from implicit differentiation.
double omega_star_dD(double L, double D);

struct BoundConstant {
  std::string label;    // e.g. "lower"
  std::string variant;  // "stated", "printed" or "corrected-candidate"
  double value = 0.0;
};

/// Constants for the tags "nicaise" (L), "friedlander" (L, k), "neig2" (L, D),
/// "neigk" (L, D, k, beta), "prop14" (L, D), "wentzell" (L, D). Where the
/// printed form is in doubt both the printed and the corrected-candidate
/// constant are returned.
std::vector<BoundConstant> closed_form_bounds(const std::string& tag, const std::map<std::string, double>& params);
std::vector<std::string> bound_tags();

}  // namespace qglab

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qglab/graph.hpp"

namespace qglab {

/// Parameter combinations outside a family's domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Star with one Dirichlet edge of length (nD - L)/(n - 1) and n pendant
/// edges of length (L - D)/(n - 1) at a common centre.
struct StarParams {
  double L = 0.0;
  double D = 0.0;
  int n = 2;

  double dirichlet_edge() const { return (n * D - L) / (n - 1); }
  double pendant_edge() const { return (L - D) / (n - 1); }
};

void validate(const StarParams& p);
/// Pendant edges no longer than the Dirichlet edge. The star's diameter equals
/// D exactly when this holds.
bool shorter_edges_ok(const StarParams& p);

/// Handle v1 -- v2 of length l0, n pendants of length l1 at v1 and n of length
/// l2 at v2. Zero pendant lengths drop that pendant set.
struct DumbbellParams {
  double l0 = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
  int n = 1;
};

/// Vertex ids: "v0" (Dirichlet tip), "c" (centre), "p1".."pn"; edge "e0" is
/// the Dirichlet edge oriented v0 -> c, "e1".."en" the pendants.
MetricGraph make_star(const StarParams& p);

/// Vertex ids "v1", "v2", "a1".."an", "b1".."bn"; handle edge "h".
MetricGraph make_star_dumbbell(const DumbbellParams& p);

/// Symmetric star dumbbell of total length L and diameter D.
MetricGraph make_dn(double L, double D, int n);

/// k copies of S(L/k, D/2, n) joined at their Dirichlet tips (now natural).
MetricGraph make_tn(double L, double D, int k, int n);

MetricGraph make_path(double L);
MetricGraph make_loop(double L);
MetricGraph make_equilateral_star(double L, int k);
MetricGraph make_tadpole(double loop_length, double tail_length);
/// 4-cycle of side `side` with one pendant of length `pendant` at every cycle vertex.
MetricGraph make_cycle_with_pendants(double side, double pendant);

enum class BasicKind { Path, Loop, EquilateralStar, Tadpole, CycleWithPendants };
MetricGraph make_basic(BasicKind kind, const std::vector<double>& params);

/// Builds a family by CLI name ("star", "dumbbell", "Dn", "Tn", "path", "loop",
/// "equilateral_star", "tadpole", "cycle_pendants") from named numeric parameters.
MetricGraph make_family(const std::string& name, const std::map<std::string, double>& params);
std::vector<std::string> family_names();

/// cos(k l0) cos(k l1) - n sin(k l0) sin(k l1); its smallest positive root is
/// the first Dirichlet eigenvalue's wavenumber.
double star_secular(const StarParams& p, double k);
/// Smallest positive root of star_secular, located by a grid scan and
/// bisection; its square is the star's first Dirichlet eigenvalue.
double star_secular_root(const StarParams& p);

/// Isomorphism invariant adequate for comparing the families above: per-vertex
/// (condition, sorted incident lengths) signatures plus the sorted length list.
/// Optionally suppresses natural degree-two vertices first.
std::string canonical_form(const MetricGraph& g, bool suppress_degree_two = false);

}  // namespace qglab

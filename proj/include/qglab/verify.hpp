#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qglab/bounds.hpp"
#include "qglab/families.hpp"
#include "qglab/spectral.hpp"

namespace qglab {

enum class Verdict { Holds, Fails, HypothesisNotMet, Inconclusive };
std::string to_string(Verdict v);

/// Computed eigenvalue against a bound. `margin` is value - bound for lower
/// bounds (bound - value for upper bounds), so a positive margin means the
/// inequality holds strictly.
struct BoundReport {
  std::string id;
  std::string graph;
  double L = 0.0;
  double D = 0.0;
  int beta = 0;
  int k = 0;
  double value = 0.0;
  double bound = 0.0;
  std::string variant = "stated";
  Verdict verdict = Verdict::Inconclusive;
  double margin = 0.0;
  std::vector<std::pair<std::string, double>> extra;
  std::string note;
};

/// Rows of numbers with a summary verdict.
struct Table {
  std::string id;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  Verdict verdict = Verdict::Inconclusive;
  double margin = 0.0;
  std::string note;
};

/// Deterministic generator: mt19937_64 with an explicit 53-bit mapping so the
/// stream does not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  /// Integer in [lo, hi].
  int integer(int lo, int hi) { return lo + static_cast<int>(uniform() * (hi - lo + 1)); }

 private:
  std::mt19937_64 engine_;
};

struct RandomGraphSpec {
  std::uint64_t seed = 1;
  int min_edges = 2;
  int max_edges = 6;
  int beta = 0;
  double min_length = 0.2;
  double max_length = 1.0;
  /// Multiply every length by 1 + u 1e-3 with u uniform in [-1, 1].
  bool jitter = false;
  bool allow_loops = true;
  /// Number of leaves marked Dirichlet (trees only pick existing leaves).
  int dirichlet_leaves = 0;
};

/// Connected graph with E in [min_edges, max_edges] (at least beta + 1) and
/// Betti number beta: a random tree plus beta extra edges. Vertex ids "v<i>",
/// edge ids "e<i>".
MetricGraph random_graph(const RandomGraphSpec& spec);

std::string describe(const MetricGraph& g);

constexpr double kVerifyTol = 1e-9;

/// mu_2 > omega_thm1(L, D)^2. Throws ParameterError when D = L or the graph
/// has Dirichlet vertices.
BoundReport check_thm1(const MetricGraph& g, double tol = kVerifyTol, const SolverOptions& opts = {});
/// mu_k > omega_thm2(L, D, k, beta)^2, gated on gamma > 0, D < L and no loop
/// longer than D.
BoundReport check_thm2(const MetricGraph& g, int k, double tol = kVerifyTol, const SolverOptions& opts = {});
/// mu_2 >= pi^2 / L^2.
BoundReport check_nicaise(const MetricGraph& g, double tol = kVerifyTol, const SolverOptions& opts = {});
/// mu_k >= pi^2 k^2 / (4 L^2), the value attained by the equilateral k-star.
BoundReport check_friedlander(const MetricGraph& g, int k, double tol = kVerifyTol, const SolverOptions& opts = {});
/// mu_k(g) against omega_conjecture(L, D, k)^2; HypothesisNotMet unless L/k > D/2.
BoundReport check_conjecture(const MetricGraph& g, int k, double tol = kVerifyTol, const SolverOptions& opts = {});

/// Columns n, mu2_Dn, mu1D_star, gap, relative_gap. Holds when mu2 strictly
/// decreases, the gap stays positive and decreasing, and mu2(D_n) equals the
/// half-star value within 1e-9.
Table check_convergence_Dn(double L, double D, const std::vector<int>& ns);

/// Columns n, mu1D. Strict decrease in n.
Table star_monotonicity_n(double L, double D, const std::vector<int>& ns);
/// Columns D, mu1D. Strict decrease in D.
Table star_monotonicity_D(double L, int n, const std::vector<double>& Ds);
/// Smallest n1 >= n with mu1D(S(L_long, D, n1)) < mu1D(S(L, D, n)); columns
/// n1, mu1D. Inconclusive beyond n1 = 512.
Table star_longer_witness(double L, double L_long, double D, int n);
/// The three tables above.
std::vector<Table> check_star_monotonicity(double L, const std::vector<double>& Ds, const std::vector<int>& ns);

/// mu_2 of D(l0, l1, l - l1, n) over `grid` evenly spaced l1 in [0, l].
/// Columns l1, mu2, pruefer_slope, fd_slope.
Table check_dumbbell_balance(double l0, double l, int n, int grid);

BoundReport check_symmetrisation(const StarParams& s1, const StarParams& s2);

/// First n with mu1D(S(L, d, n)) <= mu1D(h) + 1e-9 where L = |h| and d is the
/// Dirichlet eccentricity. Doubling then bisection in n; cap 512.
BoundReport check_key_lemma(const MetricGraph& h, const SolverOptions& opts = {});

/// Evaluates the conjecture on `samples` random graphs; violations are
/// written as MGF files into `out_dir` (when nonempty) before being reported.
std::vector<BoundReport> explore_conjecture(const RandomGraphSpec& spec, int k, int samples,
                                            const std::string& out_dir = {});

/// Equilateral k-star values for k = 2..kmax against both lower-bound readings.
Table friedlander_resolution(double L, int kmax = 5);

/// Nodal count window k - beta <= m <= k and mu1D(component) = mu_k. Needs a
/// simple mu_k whose eigenfunction does not vanish at vertices.
BoundReport check_nodal_count(const MetricGraph& g, int k, const SolverOptions& opts = {});

/// mu_m(g) <= max mu1D(piece) over the m pieces of a cut at `points`.
BoundReport check_partition(const MetricGraph& g, const std::vector<GraphPoint>& points, const SolverOptions& opts = {});

/// Finite-difference d mu_2 / d l_e against minus the Pruefer amplitude.
BoundReport check_hadamard(const MetricGraph& g, std::size_t edge, double h = 1e-4, const SolverOptions& opts = {});

/// mu_j(glue) >= mu_j(g) for j = 2..5.
BoundReport check_glue(const MetricGraph& g, std::size_t v1, std::size_t v2, const SolverOptions& opts = {});
/// mu_2 (or mu1D with Dirichlet vertices) does not increase; strictly
/// decreases when the eigenvalue is simple and its eigenfunction is nonzero on the edge.
BoundReport check_lengthen(const MetricGraph& g, std::size_t edge, double delta, const SolverOptions& opts = {});
/// First Dirichlet eigenfunction, L2-normalized with its sign chosen so that
/// it is nonnegative. Throws ParameterError without a Dirichlet vertex.
WaveFunction positive_ground_state(const MetricGraph& g, const SolverOptions& opts = {});

/// Removes `delete_edges`, adds their total length as one pendant at v, and
/// compares mu1D when the transplantation condition holds for the
/// nonnegative ground state.
BoundReport check_transplant(const MetricGraph& g, const std::vector<std::size_t>& delete_edges, std::size_t v,
                             const SolverOptions& opts = {});

/// (a) equilateral stars vs both Friedlander readings, (b) Prop-style star
/// bounds, literal and doubled, (c) Wentzell coefficient readings.
std::vector<Table> discrepancy_report();

}  // namespace qglab

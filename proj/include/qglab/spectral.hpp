#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "qglab/graph.hpp"

namespace qglab {

class SpectralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Restriction of a function to one edge: a cos(kx) + b sin(kx) in the edge's
/// local coordinate. For k = 0 the wave is the constant a.
struct EdgeWave {
  std::size_t edge = 0;
  double a = 0.0;
  double b = 0.0;
};

/// Piecewise trigonometric function with a common wavenumber on every edge.
struct WaveFunction {
  double k = 0.0;
  std::vector<EdgeWave> waves;  // indexed by edge

  double value(std::size_t edge, double x) const;
  double derivative(std::size_t edge, double x) const;
  double value_at(const MetricGraph& g, std::size_t vertex) const;
};

struct Eigenpair {
  double lambda = 0.0;
  double k = 0.0;
  std::vector<EdgeWave> waves;
  int multiplicity = 1;
  bool normalized = false;

  WaveFunction function() const { return {k, waves}; }
  double value(std::size_t edge, double x) const { return function().value(edge, x); }
  double derivative(std::size_t edge, double x) const { return function().derivative(edge, x); }
};

struct SpectrumLevel {
  double lambda = 0.0;
  int multiplicity = 1;
};

struct SolverDiagnostics {
  std::string locator;
  double scan_step = 0.0;
  std::size_t count_evaluations = 0;
  std::size_t svd_evaluations = 0;
  std::size_t brackets = 0;
  /// Largest smallest-singular-value of the scaled secular matrix at the located roots.
  double max_secular_value = 0.0;
  /// Largest |exact - FEM extrapolated| over the returned values; NaN when not run.
  double fem_delta = std::numeric_limits<double>::quiet_NaN();
  bool fem_consistent = true;
  std::vector<std::string> warnings;
};

/// Lowest eigenvalues with multiplicity. `values` repeats each eigenvalue
/// according to its multiplicity and has exactly the requested length;
/// `levels` groups them, the last level carrying its full multiplicity.
struct Spectrum {
  std::vector<double> values;
  std::vector<SpectrumLevel> levels;
  SolverDiagnostics diagnostics;

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t i) const { return values.at(i); }
};

enum class RootLocator {
  /// Bisection on the exact eigenvalue counting function (Sylvester inertia of
  /// the vertex form plus per-edge Dirichlet counts).
  Inertia,
  /// Uniform k-scan of the secular matrix's smallest singular value with
  /// golden-section refinement of local minima.
  SingularScan,
};

struct SolverOptions {
  /// Wavenumber tolerance, relative to 1 + k.
  double tol_k = 1e-13;
  /// Singular values below tol_rank * ||A|| count towards the nullity.
  double tol_rank = 1e-7;
  /// Smallest singular value above which a candidate is not an eigenvalue.
  double accept_threshold = 1e-6;
  RootLocator locator = RootLocator::Inertia;
  bool fem_cross_check = false;
  double fem_h = 0.0;  // 0: min edge length / 32
};

/// Square matrix of size 2E whose null space parametrizes eigenfunctions with
/// eigenvalue k^2. Unknowns are (a_e, b_e) per edge. Rows: value agreement at
/// natural vertices, Kirchhoff (outgoing derivatives / k), value zero at
/// Dirichlet vertices.
Eigen::MatrixXd secular_matrix(const MetricGraph& g, double k);

/// secular_matrix with every row divided by the square root of its number of
/// end terms, so that all rows have norm at most 1.
Eigen::MatrixXd scaled_secular_matrix(const MetricGraph& g, double k);

/// Smallest singular value of the scaled secular matrix.
double secular_value(const MetricGraph& g, double k);

/// Number of eigenvalues (with multiplicity) strictly below k^2.
std::size_t eigenvalue_count(const MetricGraph& g, double k);

Spectrum eigenvalues(const MetricGraph& g, std::size_t count, const SolverOptions& opts = {});

/// L2-orthonormal basis of the eigenspace of `lambda`. `lambda` is polished to
/// the nearby exact eigenvalue first; throws SpectralError when there is none.
std::vector<Eigenpair> eigenfunctions(const MetricGraph& g, double lambda, const SolverOptions& opts = {});

/// Basis of the eigenspace of the `index`-th eigenvalue (1-based, with
/// multiplicity).
std::vector<Eigenpair> eigenfunctions_at(const MetricGraph& g, std::size_t index, const SolverOptions& opts = {});

/// Largest violation of continuity, Kirchhoff (divided by 1 + k) and Dirichlet
/// conditions.
double vertex_residual(const MetricGraph& g, const WaveFunction& f);

/// Exact L2 inner product of two piecewise waves (wavenumbers may differ).
double inner_product(const MetricGraph& g, const WaveFunction& f, const WaveFunction& h);
double l2_norm(const MetricGraph& g, const WaveFunction& f);
double dirichlet_energy(const MetricGraph& g, const WaveFunction& f);

/// Continuous piecewise-linear function: uniform nodal values per edge,
/// endpoints included (at least 2 per edge).
struct PiecewiseLinear {
  std::vector<std::vector<double>> nodes;
};

class InadmissibleFunction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

double rayleigh_quotient(const MetricGraph& g, const WaveFunction& f);
double rayleigh_quotient(const MetricGraph& g, const PiecewiseLinear& f);

/// lambda psi^2 + psi'^2 on `edge`, i.e. k^2 (a^2 + b^2).
double pruefer_amplitude(const Eigenpair& ep, std::size_t edge);

/// d lambda / d|edge| for a simple eigenvalue; throws SpectralError when the
/// eigenvalue is multiple.
double hadamard_derivative(const MetricGraph& g, double lambda, std::size_t edge, const SolverOptions& opts = {});
std::vector<double> hadamard_derivatives(const MetricGraph& g, double lambda, const SolverOptions& opts = {});

/// max of |f| over an edge.
double max_abs_on_edge(const MetricGraph& g, const WaveFunction& f, std::size_t edge);
/// max of f over an edge.
double max_on_edge(const MetricGraph& g, const WaveFunction& f, std::size_t edge);

struct NodalDomain {
  /// Component with Dirichlet vertices at the zeros of the eigenfunction.
  MetricGraph graph;
  /// Restriction of the eigenfunction, indexed by the component's edges.
  Eigenpair restriction;
  /// Start point on the original graph of each component edge.
  std::vector<GraphPoint> origin;
};

/// Nodal domains of one eigenfunction (lambda > 0). Throws SpectralError if it
/// vanishes identically on an edge.
std::vector<NodalDomain> nodal_domains(const MetricGraph& g, const Eigenpair& ep);

}  // namespace qglab

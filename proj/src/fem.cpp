#include "qglab/fem.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qglab/spectral.hpp"

namespace qglab {
namespace {

std::vector<double> dense_eigenvalues(const FemSystem& sys, std::size_t count) {
  const Eigen::MatrixXd k(sys.stiffness);
  const Eigen::MatrixXd m(sys.mass);
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(k, m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw SpectralError("dense generalized eigensolver failed");
  std::vector<double> out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size() && out.size() < count; ++i)
    out.push_back(std::max(0.0, es.eigenvalues()(i)));
  return out;
}

// Block shift-invert subspace iteration with Rayleigh-Ritz on K + s M.
std::vector<double> subspace_eigenvalues(const FemSystem& sys, std::size_t count, double shift) {
  const Eigen::Index n = sys.stiffness.rows();
  const Eigen::Index p = std::min<Eigen::Index>(n, std::max<Eigen::Index>(2 * count, count + 8));
  Eigen::SparseMatrix<double> a = sys.stiffness + shift * sys.mass;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(a);
  if (solver.info() != Eigen::Success) throw SpectralError("sparse factorization failed");

  Eigen::MatrixXd x(n, p);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < p; ++j) x(i, j) = std::sin(0.37 * (i + 1) * (j + 1) + 0.11 * j) + (j == 0 ? 1.0 : 0.0);

  std::vector<double> prev(count, 0.0);
  Eigen::VectorXd theta;
  for (int it = 0; it < 5000; ++it) {
    Eigen::MatrixXd y = solver.solve(sys.mass * x);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(y);
    const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, p);
    const Eigen::MatrixXd kr = q.transpose() * (sys.stiffness * q);
    const Eigen::MatrixXd mr = q.transpose() * (sys.mass * q);
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(kr, mr);
    if (es.info() != Eigen::Success) throw SpectralError("Rayleigh-Ritz step failed");
    theta = es.eigenvalues();
    x = q * es.eigenvectors();
    bool done = it > 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (std::abs(theta(i) - prev[i]) > 1e-13 * (std::abs(theta(i)) + shift)) done = false;
      prev[i] = theta(i);
    }
    if (done) break;
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(std::max(0.0, theta(i)));
  return out;
}

}  // namespace

Mesh make_mesh(const MetricGraph& g, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("mesh size must be positive");
  std::vector<int> el;
  for (const Edge& e : g.edges()) el.push_back(std::max(1, static_cast<int>(std::ceil(e.length / h - 1e-9))));
  return make_mesh(g, std::move(el));
}

Mesh make_mesh(const MetricGraph& g, std::vector<int> elements) {
  if (elements.size() != g.edge_count()) throw std::invalid_argument("one element count per edge required");
  Mesh m;
  m.elements = std::move(elements);
  std::vector<long> vdof(g.vertex_count(), -1);
  long next = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!g.is_dirichlet(v)) vdof[v] = next++;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const int ne = m.elements[e];
    if (ne < 1) throw std::invalid_argument("every edge needs at least one element");
    std::vector<long> nodes(ne + 1);
    nodes.front() = vdof[g.edge(e).u];
    nodes.back() = vdof[g.edge(e).v];
    for (int i = 1; i < ne; ++i) nodes[i] = next++;
    m.node_dofs.push_back(std::move(nodes));
  }
  m.dof_count = static_cast<std::size_t>(next);
  return m;
}

Mesh refine(const MetricGraph& g, const Mesh& mesh) {
  std::vector<int> el = mesh.elements;
  for (int& x : el) x *= 2;
  return make_mesh(g, std::move(el));
}

FemSystem assemble(const MetricGraph& g, const Mesh& mesh) {
  using Triplet = Eigen::Triplet<double>;
  std::vector<Triplet> kt;
  std::vector<Triplet> mt;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const double h = mesh.element_size(g, e);
    const auto& nodes = mesh.node_dofs[e];
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      const long d[2] = {nodes[i], nodes[i + 1]};
      const double ke[2][2] = {{1.0 / h, -1.0 / h}, {-1.0 / h, 1.0 / h}};
      const double me[2][2] = {{h / 3.0, h / 6.0}, {h / 6.0, h / 3.0}};
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
          if (d[r] < 0 || d[c] < 0) continue;
          kt.emplace_back(d[r], d[c], ke[r][c]);
          mt.emplace_back(d[r], d[c], me[r][c]);
        }
    }
  }
  const auto n = static_cast<Eigen::Index>(mesh.dof_count);
  FemSystem sys{Eigen::SparseMatrix<double>(n, n), Eigen::SparseMatrix<double>(n, n)};
  sys.stiffness.setFromTriplets(kt.begin(), kt.end());
  sys.mass.setFromTriplets(mt.begin(), mt.end());
  return sys;
}

std::vector<double> fem_eigenvalues_on(const MetricGraph& g, const Mesh& mesh, std::size_t count) {
  if (count == 0) throw std::invalid_argument("eigenvalue count must be at least 1");
  if (count > mesh.dof_count) throw std::invalid_argument("mesh has fewer DOFs than requested eigenvalues");
  const FemSystem sys = assemble(g, mesh);
  if (mesh.dof_count <= kDenseDofLimit) return dense_eigenvalues(sys, count);
  const double L = total_length(g);
  return subspace_eigenvalues(sys, count, 1.0 / (L * L));
}

double FemEstimate::tolerance() const { return error + 1e-9 * (1.0 + std::abs(extrapolated)); }

std::vector<FemEstimate> fem_eigenvalues(const MetricGraph& g, std::size_t count, double h) {
  if (h <= 0.0) h = g.min_edge_length() / 32.0;
  const Mesh coarse = make_mesh(g, h);
  const Mesh fine = refine(g, coarse);
  const auto lc = fem_eigenvalues_on(g, coarse, count);
  const auto lf = fem_eigenvalues_on(g, fine, count);
  std::vector<FemEstimate> out;
  for (std::size_t i = 0; i < count; ++i) {
    FemEstimate est;
    est.coarse = lc[i];
    est.fine = lf[i];
    est.extrapolated = (4.0 * lf[i] - lc[i]) / 3.0;
    est.error = std::abs(lc[i] - lf[i]) / 3.0;
    out.push_back(est);
  }
  return out;
}

}  // namespace qglab

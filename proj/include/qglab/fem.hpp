#pragma once

#include <Eigen/SparseCore>
#include <cstddef>
#include <vector>

#include "qglab/graph.hpp"

namespace qglab {

/// P1 mesh: `elements[e]` uniform elements on edge e. `node_dofs[e][i]` is
/// the global DOF of node i along edge e, or -1 at a Dirichlet vertex.
struct Mesh {
  std::vector<int> elements;
  std::vector<std::vector<long>> node_dofs;
  std::size_t dof_count = 0;

  double element_size(const MetricGraph& g, std::size_t e) const { return g.edge(e).length / elements.at(e); }
};

/// Elements per edge chosen as ceil(length / h), at least 1.
Mesh make_mesh(const MetricGraph& g, double h);
Mesh make_mesh(const MetricGraph& g, std::vector<int> elements);
/// Every element halved.
Mesh refine(const MetricGraph& g, const Mesh& mesh);

struct FemSystem {
  Eigen::SparseMatrix<double> stiffness;
  Eigen::SparseMatrix<double> mass;
};

FemSystem assemble(const MetricGraph& g, const Mesh& mesh);

/// Lowest `count` generalized eigenvalues of the assembled pencil.
std::vector<double> fem_eigenvalues_on(const MetricGraph& g, const Mesh& mesh, std::size_t count);

/// Meshes up to this many DOFs use the dense generalized solver; larger ones
/// use shift-invert subspace iteration.
inline constexpr std::size_t kDenseDofLimit = 400;

struct FemEstimate {
  double coarse = 0.0;        // lambda_h
  double fine = 0.0;          // lambda_{h/2}
  double extrapolated = 0.0;  // (4 lambda_{h/2} - lambda_h) / 3
  double error = 0.0;         // |lambda_h - lambda_{h/2}| / 3

  /// Agreement window used in comparisons: the error estimate plus a
  /// rounding floor.
  double tolerance() const;
};

/// h = 0 selects min edge length / 32.
std::vector<FemEstimate> fem_eigenvalues(const MetricGraph& g, std::size_t count, double h = 0.0);

}  // namespace qglab

#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qglab/graph.hpp"

namespace qglab {

class SurgeryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Identifies v2 with v1. The merged vertex keeps v1's id and is Dirichlet if
/// either input was.
MetricGraph glue(const MetricGraph& g, std::size_t v1, std::size_t v2);

/// Inserts a natural vertex at an interior point; it becomes the last vertex.
MetricGraph subdivide(const MetricGraph& g, GraphPoint p);

/// Splits the graph at an interior point into two new degree-one vertices.
/// Throws SurgeryError if the result would be disconnected or p is a vertex.
MetricGraph cut(const MetricGraph& g, GraphPoint p);

/// Detaches the edge ends in `part` from v onto a new vertex. Both sides of the
/// bipartition must be nonempty.
MetricGraph cut_vertex(const MetricGraph& g, std::size_t v, std::span<const EdgeEnd> part);

/// Cuts at every interior point and returns the connected pieces, ordered by
/// their first edge. New vertices are Dirichlet when requested.
std::vector<MetricGraph> split_at_points(const MetricGraph& g, std::span<const GraphPoint> points,
                                         bool dirichlet_at_cuts = false);

MetricGraph lengthen(const MetricGraph& g, std::size_t edge, double delta);

struct TransplantPlan {
  std::vector<std::size_t> delete_edges;
  std::size_t vertex = 0;
  /// New pendant edges attached at `vertex`.
  std::vector<double> pendants;
  /// (edge, delta) extensions of surviving edges.
  std::vector<std::pair<std::size_t, double>> extensions;
};

/// Deletes edges without gluing their endpoints, keeps the piece containing
/// `vertex`, then applies the additions. Total added length must cover all
/// removed length, and no surviving Dirichlet vertex may be cut off.
MetricGraph transplant(const MetricGraph& g, const TransplantPlan& plan);

/// Repeatedly cuts every loop (after suppressing degree-two vertices) at the
/// point opposite its base vertex.
MetricGraph cut_loop_midpoints(const MetricGraph& g);

}  // namespace qglab

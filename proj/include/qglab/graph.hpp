#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qglab {

/// Raised for structurally invalid graphs (nonpositive length, duplicate id,
/// disconnected, unknown reference).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the MGF reader; carries the 1-based line number.
class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

enum class VertexCondition { Natural, Dirichlet };

struct Vertex {
  std::string id;
  VertexCondition condition = VertexCondition::Natural;
};

/// Edge with local coordinate x in [0, length] running from `u` to `v`.
struct Edge {
  std::string id;
  std::size_t u = 0;
  std::size_t v = 0;
  double length = 0.0;

  bool is_loop() const noexcept { return u == v; }
};

/// One end of an edge as seen from a vertex. `side` 0 is x = 0, side 1 is x = length.
struct EdgeEnd {
  std::size_t edge = 0;
  int side = 0;

  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

/// A location on the graph: edge index plus arclength offset from the edge's `u` end.
struct GraphPoint {
  std::size_t edge = 0;
  double offset = 0.0;
};

/// Compact connected metric graph. Immutable after construction; loops and
/// parallel edges are allowed.
class MetricGraph {
 public:
  MetricGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  std::size_t vertex_index(std::string_view id) const;
  std::size_t edge_index(std::string_view id) const;
  bool has_vertex(std::string_view id) const;
  bool has_edge(std::string_view id) const;

  bool is_dirichlet(std::size_t v) const { return vertices_.at(v).condition == VertexCondition::Dirichlet; }
  bool has_dirichlet() const noexcept;
  std::vector<std::size_t> dirichlet_vertices() const;

  /// Edge ends meeting at `v`; a loop contributes two ends.
  const std::vector<EdgeEnd>& incident(std::size_t v) const { return incidence_.at(v); }
  std::size_t degree(std::size_t v) const { return incidence_.at(v).size(); }

  /// Vertex at the given end of an edge.
  std::size_t endpoint(EdgeEnd end) const {
    const Edge& e = edges_.at(end.edge);
    return end.side == 0 ? e.u : e.v;
  }

  double min_edge_length() const noexcept;

  /// Copy whose Dirichlet set is exactly `dirichlet` (vertex indices).
  MetricGraph with_dirichlet(std::span<const std::size_t> dirichlet) const;
  /// Copy with every vertex natural.
  MetricGraph with_all_natural() const;
  MetricGraph with_edge_length(std::size_t e, double length) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeEnd>> incidence_;
  std::unordered_map<std::string, std::size_t> vertex_lookup_;
  std::unordered_map<std::string, std::size_t> edge_lookup_;
};

/// Incremental construction by id; `build()` validates.
class GraphBuilder {
 public:
  GraphBuilder& vertex(std::string id, VertexCondition condition = VertexCondition::Natural);
  GraphBuilder& edge(std::string id, std::string_view u, std::string_view v, double length);
  bool has_vertex(std::string_view id) const;
  MetricGraph build() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

bool is_valid_id(std::string_view id) noexcept;

/// Reads the MGF text format:
///   # comment
///   vertex <id> [dirichlet]
///   edge <id> <u> <v> <length>
MetricGraph parse_graph(std::string_view text);
MetricGraph read_graph_file(const std::string& path);
/// Writes MGF with shortest round-trip decimal lengths.
std::string to_mgf(const MetricGraph& g);

double total_length(const MetricGraph& g);
/// E - V + 1.
std::size_t betti(const MetricGraph& g);

/// Shortest-path distances between all vertex pairs.
std::vector<std::vector<double>> vertex_distances(const MetricGraph& g);

double distance(const MetricGraph& g, GraphPoint p, GraphPoint q);

struct DiameterWitness {
  double value = 0.0;
  GraphPoint p;
  GraphPoint q;
};

/// Exact maximum of the path distance over all point pairs.
DiameterWitness diameter_witness(const MetricGraph& g);
double diameter(const MetricGraph& g);

/// Largest distance from a point of the graph to the Dirichlet set.
/// Throws GraphError if there is no Dirichlet vertex.
double dirichlet_eccentricity(const MetricGraph& g);

/// A cycle that closes on a single vertex once natural degree-two vertices
/// are suppressed; `chain` lists the original edges in traversal order.
struct Loop {
  std::size_t base = 0;
  double length = 0.0;
  std::vector<EdgeEnd> chain;  // each entry: edge and the side it is entered from
};

std::vector<Loop> find_loops(const MetricGraph& g);
/// Merges the two edges at every natural degree-two vertex. Merged edges keep
/// the id of their first constituent.
MetricGraph suppress_degree_two(const MetricGraph& g);
double max_loop_length(const MetricGraph& g);

}  // namespace qglab

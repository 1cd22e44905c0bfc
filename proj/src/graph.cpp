#include "qglab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace qglab {

bool is_valid_id(std::string_view id) noexcept {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

MetricGraph::MetricGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) throw GraphError("graph has no vertices");
  if (edges_.empty()) throw GraphError("graph has no edges");

  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!is_valid_id(vertices_[i].id)) throw GraphError("invalid vertex id '" + vertices_[i].id + "'");
    if (!vertex_lookup_.emplace(vertices_[i].id, i).second)
      throw GraphError("duplicate vertex id '" + vertices_[i].id + "'");
  }
  incidence_.resize(vertices_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (!is_valid_id(e.id)) throw GraphError("invalid edge id '" + e.id + "'");
    if (!edge_lookup_.emplace(e.id, i).second) throw GraphError("duplicate edge id '" + e.id + "'");
    if (e.u >= vertices_.size() || e.v >= vertices_.size())
      throw GraphError("edge '" + e.id + "' references an unknown vertex");
    if (!(e.length > 0.0) || !std::isfinite(e.length))
      throw GraphError("edge '" + e.id + "' has nonpositive length");
    incidence_[e.u].push_back({i, 0});
    incidence_[e.v].push_back({i, 1});
  }

  // connectivity by union-find
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges_) parent[find(e.u)] = find(e.v);
  const std::size_t root = find(0);
  for (std::size_t i = 1; i < vertices_.size(); ++i)
    if (find(i) != root) throw GraphError("graph is disconnected");
}

std::size_t MetricGraph::vertex_index(std::string_view id) const {
  auto it = vertex_lookup_.find(std::string(id));
  if (it == vertex_lookup_.end()) throw GraphError("unknown vertex '" + std::string(id) + "'");
  return it->second;
}

std::size_t MetricGraph::edge_index(std::string_view id) const {
  auto it = edge_lookup_.find(std::string(id));
  if (it == edge_lookup_.end()) throw GraphError("unknown edge '" + std::string(id) + "'");
  return it->second;
}

bool MetricGraph::has_vertex(std::string_view id) const { return vertex_lookup_.count(std::string(id)) > 0; }
bool MetricGraph::has_edge(std::string_view id) const { return edge_lookup_.count(std::string(id)) > 0; }

bool MetricGraph::has_dirichlet() const noexcept {
  return std::any_of(vertices_.begin(), vertices_.end(),
                     [](const Vertex& v) { return v.condition == VertexCondition::Dirichlet; });
}

std::vector<std::size_t> MetricGraph::dirichlet_vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].condition == VertexCondition::Dirichlet) out.push_back(i);
  return out;
}

double MetricGraph::min_edge_length() const noexcept {
  double m = std::numeric_limits<double>::infinity();
  for (const Edge& e : edges_) m = std::min(m, e.length);
  return m;
}

MetricGraph MetricGraph::with_dirichlet(std::span<const std::size_t> dirichlet) const {
  std::vector<Vertex> vs = vertices_;
  for (Vertex& v : vs) v.condition = VertexCondition::Natural;
  for (std::size_t i : dirichlet) vs.at(i).condition = VertexCondition::Dirichlet;
  return MetricGraph(std::move(vs), edges_);
}

MetricGraph MetricGraph::with_all_natural() const { return with_dirichlet({}); }

MetricGraph MetricGraph::with_edge_length(std::size_t e, double length) const {
  std::vector<Edge> es = edges_;
  es.at(e).length = length;
  return MetricGraph(vertices_, std::move(es));
}

GraphBuilder& GraphBuilder::vertex(std::string id, VertexCondition condition) {
  if (lookup_.count(id)) throw GraphError("duplicate vertex id '" + id + "'");
  lookup_.emplace(id, vertices_.size());
  vertices_.push_back({std::move(id), condition});
  return *this;
}

GraphBuilder& GraphBuilder::edge(std::string id, std::string_view u, std::string_view v, double length) {
  auto iu = lookup_.find(std::string(u));
  auto iv = lookup_.find(std::string(v));
  if (iu == lookup_.end()) throw GraphError("edge '" + id + "' references unknown vertex '" + std::string(u) + "'");
  if (iv == lookup_.end()) throw GraphError("edge '" + id + "' references unknown vertex '" + std::string(v) + "'");
  edges_.push_back({std::move(id), iu->second, iv->second, length});
  return *this;
}

bool GraphBuilder::has_vertex(std::string_view id) const { return lookup_.count(std::string(id)) > 0; }

MetricGraph GraphBuilder::build() const { return MetricGraph(vertices_, edges_); }

double total_length(const MetricGraph& g) {
  double s = 0.0;
  for (const Edge& e : g.edges()) s += e.length;
  return s;
}

std::size_t betti(const MetricGraph& g) { return g.edge_count() + 1 - g.vertex_count(); }

}  // namespace qglab

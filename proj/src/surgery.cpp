#include "qglab/surgery.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace qglab {
namespace {

struct Raw {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::set<std::string> vids;
  std::set<std::string> eids;

  explicit Raw(const MetricGraph& g) : vertices(g.vertices()), edges(g.edges()) {
    for (const Vertex& v : vertices) vids.insert(v.id);
    for (const Edge& e : edges) eids.insert(e.id);
  }

  static std::string fresh(const std::string& base, std::set<std::string>& used) {
    std::string id = base;
    for (int i = 2; used.count(id); ++i) id = base + std::to_string(i);
    used.insert(id);
    return id;
  }

  std::size_t add_vertex(const std::string& base, VertexCondition c) {
    vertices.push_back({fresh(base, vids), c});
    return vertices.size() - 1;
  }

  std::size_t add_edge(const std::string& base, std::size_t u, std::size_t v, double len) {
    edges.push_back({fresh(base, eids), u, v, len});
    return edges.size() - 1;
  }
};

std::size_t root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Connected pieces; isolated vertices are dropped.
std::vector<MetricGraph> components(const Raw& raw) {
  const std::size_t n = raw.vertices.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Edge& e : raw.edges) parent[root(parent, e.u)] = root(parent, e.v);
  std::vector<long> comp(n, -1);
  std::vector<std::vector<Edge>> edges;
  for (const Edge& e : raw.edges) {
    const std::size_t r = root(parent, e.u);
    if (comp[r] < 0) {
      comp[r] = static_cast<long>(edges.size());
      edges.emplace_back();
    }
    edges[comp[r]].push_back(e);
  }
  std::vector<MetricGraph> out;
  for (auto& es : edges) {
    std::vector<long> map(n, -1);
    std::vector<Vertex> vs;
    // keep original vertex order
    std::vector<bool> used(n, false);
    for (const Edge& e : es) used[e.u] = used[e.v] = true;
    for (std::size_t v = 0; v < n; ++v)
      if (used[v]) {
        map[v] = static_cast<long>(vs.size());
        vs.push_back(raw.vertices[v]);
      }
    for (Edge& e : es) {
      e.u = static_cast<std::size_t>(map[e.u]);
      e.v = static_cast<std::size_t>(map[e.v]);
    }
    out.emplace_back(std::move(vs), std::move(es));
  }
  return out;
}

void check_interior(const MetricGraph& g, GraphPoint p) {
  if (p.edge >= g.edge_count()) throw SurgeryError("edge index out of range");
  const double len = g.edge(p.edge).length;
  if (!(p.offset > 0.0 && p.offset < len)) throw SurgeryError("point is not interior to its edge");
}

}  // namespace

MetricGraph glue(const MetricGraph& g, std::size_t v1, std::size_t v2) {
  if (v1 >= g.vertex_count() || v2 >= g.vertex_count()) throw SurgeryError("vertex index out of range");
  if (v1 == v2) throw SurgeryError("cannot glue a vertex to itself");
  std::vector<Vertex> vs;
  std::vector<long> map(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (v == v2) continue;
    map[v] = static_cast<long>(vs.size());
    vs.push_back(g.vertex(v));
  }
  map[v2] = map[v1];
  if (g.is_dirichlet(v2)) vs[map[v1]].condition = VertexCondition::Dirichlet;
  std::vector<Edge> es = g.edges();
  for (Edge& e : es) {
    e.u = static_cast<std::size_t>(map[e.u]);
    e.v = static_cast<std::size_t>(map[e.v]);
  }
  return MetricGraph(std::move(vs), std::move(es));
}

MetricGraph subdivide(const MetricGraph& g, GraphPoint p) {
  check_interior(g, p);
  Raw raw(g);
  const Edge old = g.edge(p.edge);
  const std::size_t m = raw.add_vertex(old.id + "_m", VertexCondition::Natural);
  raw.edges[p.edge] = {old.id, old.u, m, p.offset};
  raw.add_edge(old.id + "_b", m, old.v, old.length - p.offset);
  return MetricGraph(std::move(raw.vertices), std::move(raw.edges));
}

std::vector<MetricGraph> split_at_points(const MetricGraph& g, std::span<const GraphPoint> points,
                                         bool dirichlet_at_cuts) {
  for (const GraphPoint& p : points) check_interior(g, p);
  Raw raw(g);
  const VertexCondition cond = dirichlet_at_cuts ? VertexCondition::Dirichlet : VertexCondition::Natural;
  std::vector<std::vector<double>> cuts(g.edge_count());
  for (const GraphPoint& p : points) cuts[p.edge].push_back(p.offset);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto& cs = cuts[e];
    if (cs.empty()) continue;
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    const Edge old = g.edge(e);
    double x0 = 0.0;
    std::size_t start = old.u;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::size_t left = raw.add_vertex(old.id + "_cut", cond);
      const std::size_t right = raw.add_vertex(old.id + "_cut", cond);
      if (i == 0) raw.edges[e] = {old.id, start, left, cs[i] - x0};
      else raw.add_edge(old.id + "_s", start, left, cs[i] - x0);
      start = right;
      x0 = cs[i];
    }
    raw.add_edge(old.id + "_s", start, old.v, old.length - x0);
  }
  return components(raw);
}

MetricGraph cut(const MetricGraph& g, GraphPoint p) {
  const GraphPoint pts[1] = {p};
  auto parts = split_at_points(g, pts, false);
  if (parts.size() != 1) throw SurgeryError("cut would disconnect the graph");
  return std::move(parts.front());
}

MetricGraph cut_vertex(const MetricGraph& g, std::size_t v, std::span<const EdgeEnd> part) {
  if (v >= g.vertex_count()) throw SurgeryError("vertex index out of range");
  const auto& ends = g.incident(v);
  if (part.empty() || part.size() >= ends.size()) throw SurgeryError("vertex cut needs a proper bipartition of its edge ends");
  for (const EdgeEnd& end : part)
    if (std::find(ends.begin(), ends.end(), end) == ends.end()) throw SurgeryError("edge end is not incident to the vertex");
  Raw raw(g);
  const std::size_t w = raw.add_vertex(g.vertex(v).id + "_cut", g.vertex(v).condition);
  for (const EdgeEnd& end : part) {
    Edge& e = raw.edges[end.edge];
    (end.side == 0 ? e.u : e.v) = w;
  }
  auto parts = components(raw);
  if (parts.size() != 1) throw SurgeryError("cut would disconnect the graph");
  return std::move(parts.front());
}

MetricGraph lengthen(const MetricGraph& g, std::size_t edge, double delta) {
  if (edge >= g.edge_count()) throw SurgeryError("edge index out of range");
  if (!(delta > 0.0) || !std::isfinite(delta)) throw SurgeryError("lengthening needs delta > 0");
  return g.with_edge_length(edge, g.edge(edge).length + delta);
}

MetricGraph transplant(const MetricGraph& g, const TransplantPlan& plan) {
  if (plan.vertex >= g.vertex_count()) throw SurgeryError("vertex index out of range");
  std::vector<bool> gone(g.edge_count(), false);
  for (std::size_t e : plan.delete_edges) {
    if (e >= g.edge_count()) throw SurgeryError("edge index out of range");
    gone[e] = true;
  }
  double added = 0.0;
  for (double x : plan.pendants) {
    if (!(x > 0.0)) throw SurgeryError("pendant lengths must be positive");
    added += x;
  }
  for (const auto& [e, d] : plan.extensions) {
    if (e >= g.edge_count() || gone[e]) throw SurgeryError("extension must target a surviving edge");
    if (!(d > 0.0)) throw SurgeryError("extensions must be positive");
    added += d;
  }

  Raw kept(g);
  kept.edges.clear();
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (!gone[e]) kept.edges.push_back(g.edge(e));
  for (const auto& [e, d] : plan.extensions)
    for (Edge& k : kept.edges)
      if (k.id == g.edge(e).id) k.length += d;

  // keep the piece containing the vertex
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Edge& e : kept.edges) parent[root(parent, e.u)] = root(parent, e.v);
  const std::size_t home = root(parent, plan.vertex);
  for (std::size_t v = 0; v < n; ++v)
    if (g.is_dirichlet(v) && root(parent, v) != home) {
      // a Dirichlet vertex survives deletion if some edge still reaches it
      const bool survives = std::any_of(kept.edges.begin(), kept.edges.end(),
                                        [&](const Edge& e) { return e.u == v || e.v == v; });
      if (survives) throw SurgeryError("transplant would cut a Dirichlet vertex off from the target vertex");
    }
  double removed = 0.0;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (gone[e]) removed += g.edge(e).length;
  std::vector<Edge> es;
  for (const Edge& e : kept.edges) {
    if (root(parent, e.u) == home) es.push_back(e);
    else removed += e.length;
  }
  for (const auto& [e, d] : plan.extensions)
    if (root(parent, g.edge(e).u) != home) removed += d;  // extension landed on a dropped piece
  if (added + 1e-12 < removed) throw SurgeryError("transplant additions are shorter than the removed length");

  kept.edges = std::move(es);
  for (double x : plan.pendants) {
    const std::size_t tip = kept.add_vertex(g.vertex(plan.vertex).id + "_t", VertexCondition::Natural);
    kept.add_edge(g.vertex(plan.vertex).id + "_te", plan.vertex, tip, x);
  }
  auto parts = components(kept);
  for (MetricGraph& part : parts)
    if (part.has_vertex(g.vertex(plan.vertex).id)) return std::move(part);
  throw SurgeryError("transplant removed every edge at the target vertex");
}

MetricGraph cut_loop_midpoints(const MetricGraph& input) {
  MetricGraph g = input;
  for (std::size_t guard = 0; guard <= input.edge_count(); ++guard) {
    const auto loops = find_loops(g);
    if (loops.empty()) return g;
    const Loop& loop = loops.front();
    const double half = 0.5 * loop.length;
    double walked = 0.0;
    for (std::size_t i = 0; i < loop.chain.size(); ++i) {
      const EdgeEnd step = loop.chain[i];
      const double len = g.edge(step.edge).length;
      if (walked + len > half) {
        const double t = half - walked;
        if (t > 0.0) {
          g = cut(g, {step.edge, step.side == 0 ? t : len - t});
        } else {
          // midpoint is the vertex entered by this chain edge
          const std::size_t v = g.endpoint(step);
          const EdgeEnd part[1] = {step};
          g = cut_vertex(g, v, part);
        }
        break;
      }
      walked += len;
    }
  }
  throw SurgeryError("loop cutting did not terminate");
}

}  // namespace qglab

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>

#include "qglab/graph.hpp"

namespace qglab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> dijkstra(const MetricGraph& g, std::span<const std::size_t> sources) {
  std::vector<double> dist(g.vertex_count(), kInf);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (std::size_t s : sources) {
    dist[s] = 0.0;
    heap.push({0.0, s});
  }
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d > dist[x]) continue;
    for (EdgeEnd end : g.incident(x)) {
      const Edge& e = g.edge(end.edge);
      const std::size_t y = end.side == 0 ? e.v : e.u;
      const double nd = d + e.length;
      if (nd < dist[y]) {
        dist[y] = nd;
        heap.push({nd, y});
      }
    }
  }
  return dist;
}

// a*s + b*t + c
struct Affine {
  double a, b, c;
  double operator()(double s, double t) const { return a * s + b * t + c; }
};

// A*s + B*t + C = 0
struct Line {
  double A, B, C;
};

struct Candidate {
  double value = -kInf;
  double s = 0.0;
  double t = 0.0;
};

// Maximum over the feasible polygon of min_i f_i(s, t). The polygon is the box
// [0, ls] x [0, lt], further restricted to t <= s when `upper_triangle`.
Candidate max_of_min(std::span<const Affine> fs, double ls, double lt, bool upper_triangle) {
  std::vector<Line> lines = {{1, 0, 0}, {1, 0, -ls}, {0, 1, 0}, {0, 1, -lt}};
  if (upper_triangle) lines.push_back({1, -1, 0});
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      Line l{fs[i].a - fs[j].a, fs[i].b - fs[j].b, fs[i].c - fs[j].c};
      if (l.A != 0.0 || l.B != 0.0) lines.push_back(l);
    }

  const double tol = 1e-12 * (1.0 + ls + lt);
  Candidate best;
  auto consider = [&](double s, double t) {
    if (s < -tol || s > ls + tol || t < -tol || t > lt + tol) return;
    if (upper_triangle && t > s + tol) return;
    s = std::clamp(s, 0.0, ls);
    t = std::clamp(t, 0.0, lt);
    if (upper_triangle && t > s) t = s;
    double m = kInf;
    for (const Affine& f : fs) m = std::min(m, f(s, t));
    if (m > best.value) best = {m, s, t};
  };
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Line& p = lines[i];
      const Line& q = lines[j];
      const double det = p.A * q.B - p.B * q.A;
      if (std::abs(det) < 1e-14) continue;
      consider((p.B * q.C - q.B * p.C) / det, (q.A * p.C - p.A * q.C) / det);
    }
  return best;
}

// Route functions between a point at offset s on edge e and a point at offset t
// on edge f, leaving/entering through edge endpoints.
std::vector<Affine> routes(const MetricGraph& g, const std::vector<std::vector<double>>& d, std::size_t ei,
                           std::size_t fi) {
  const Edge& e = g.edge(ei);
  const Edge& f = g.edge(fi);
  std::vector<Affine> out;
  out.reserve(5);
  // distance from s to e.u is s, to e.v is le - s
  const std::array<Affine, 2> to_e = {Affine{1, 0, 0}, Affine{-1, 0, e.length}};
  const std::array<Affine, 2> to_f = {Affine{0, 1, 0}, Affine{0, -1, f.length}};
  const std::array<std::size_t, 2> ev = {e.u, e.v};
  const std::array<std::size_t, 2> fv = {f.u, f.v};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double mid = d[ev[i]][fv[j]];
      out.push_back({to_e[i].a + to_f[j].a, to_e[i].b + to_f[j].b, to_e[i].c + to_f[j].c + mid});
    }
  return out;
}

}  // namespace

std::vector<std::vector<double>> vertex_distances(const MetricGraph& g) {
  std::vector<std::vector<double>> d(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const std::size_t src[1] = {v};
    d[v] = dijkstra(g, src);
  }
  return d;
}

double distance(const MetricGraph& g, GraphPoint p, GraphPoint q) {
  const auto d = vertex_distances(g);
  auto fs = routes(g, d, p.edge, q.edge);
  double best = kInf;
  for (const Affine& f : fs) best = std::min(best, f(p.offset, q.offset));
  if (p.edge == q.edge) best = std::min(best, std::abs(p.offset - q.offset));
  return best;
}

DiameterWitness diameter_witness(const MetricGraph& g) {
  const auto d = vertex_distances(g);
  DiameterWitness w{-kInf, {}, {}};
  for (std::size_t ei = 0; ei < g.edge_count(); ++ei) {
    for (std::size_t fi = ei; fi < g.edge_count(); ++fi) {
      auto fs = routes(g, d, ei, fi);
      Candidate c;
      if (ei == fi) {
        fs.push_back({1, -1, 0});  // direct: s - t on t <= s
        c = max_of_min(fs, g.edge(ei).length, g.edge(fi).length, true);
      } else {
        c = max_of_min(fs, g.edge(ei).length, g.edge(fi).length, false);
      }
      if (c.value > w.value) w = {c.value, {ei, c.s}, {fi, c.t}};
    }
  }
  return w;
}

double diameter(const MetricGraph& g) { return diameter_witness(g).value; }

double dirichlet_eccentricity(const MetricGraph& g) {
  const auto dset = g.dirichlet_vertices();
  if (dset.empty()) throw GraphError("graph has no Dirichlet vertex");
  const auto delta = dijkstra(g, dset);
  double best = 0.0;
  for (const Edge& e : g.edges()) {
    const double du = delta[e.u];
    const double dv = delta[e.v];
    double m;
    if (std::abs(du - dv) >= e.length) m = std::max(std::min(du, e.length + dv), std::min(e.length + du, dv));
    else m = 0.5 * (e.length + du + dv);
    best = std::max(best, m);
  }
  return best;
}

namespace {

struct ChainEdge {
  std::size_t u, v;
  double len;
  std::vector<EdgeEnd> chain;
  bool alive = true;
};

std::vector<ChainEdge> suppressed_edges(const MetricGraph& g) {
  std::vector<ChainEdge> work;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    work.push_back({e.u, e.v, e.length, {EdgeEnd{i, 0}}});
  }
  auto reversed = [](std::vector<EdgeEnd> chain) {
    std::reverse(chain.begin(), chain.end());
    for (EdgeEnd& c : chain) c.side = 1 - c.side;
    return chain;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<std::pair<std::size_t, int>>> ends(g.vertex_count());
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (!work[i].alive) continue;
      ends[work[i].u].push_back({i, 0});
      ends[work[i].v].push_back({i, 1});
    }
    for (std::size_t w = 0; w < g.vertex_count(); ++w) {
      if (g.is_dirichlet(w) || ends[w].size() != 2) continue;
      auto [i1, s1] = ends[w][0];
      auto [i2, s2] = ends[w][1];
      if (i1 == i2) continue;
      // orient the first piece to end at w and the second to start at w
      ChainEdge a = work[i1];
      if (s1 == 0) a = {a.v, a.u, a.len, reversed(a.chain)};
      ChainEdge b = work[i2];
      if (s2 == 1) b = {b.v, b.u, b.len, reversed(b.chain)};
      ChainEdge merged{a.u, b.v, a.len + b.len, a.chain};
      merged.chain.insert(merged.chain.end(), b.chain.begin(), b.chain.end());
      work[i1] = std::move(merged);
      work[i2].alive = false;
      changed = true;
      break;
    }
  }
  std::erase_if(work, [](const ChainEdge& c) { return !c.alive; });
  return work;
}

}  // namespace

std::vector<Loop> find_loops(const MetricGraph& g) {
  std::vector<Loop> loops;
  for (const ChainEdge& w : suppressed_edges(g))
    if (w.u == w.v) loops.push_back({w.u, w.len, w.chain});
  return loops;
}

MetricGraph suppress_degree_two(const MetricGraph& g) {
  const auto work = suppressed_edges(g);
  std::vector<int> keep(g.vertex_count(), -1);
  std::vector<Vertex> vs;
  for (const ChainEdge& w : work)
    for (std::size_t x : {w.u, w.v})
      if (keep[x] < 0) {
        keep[x] = 0;
      }
  for (std::size_t x = 0; x < g.vertex_count(); ++x)
    if (keep[x] == 0) {
      keep[x] = static_cast<int>(vs.size());
      vs.push_back(g.vertex(x));
    }
  std::vector<Edge> es;
  for (const ChainEdge& w : work)
    es.push_back({g.edge(w.chain.front().edge).id, static_cast<std::size_t>(keep[w.u]),
                  static_cast<std::size_t>(keep[w.v]), w.len});
  return MetricGraph(std::move(vs), std::move(es));
}

double max_loop_length(const MetricGraph& g) {
  double m = 0.0;
  for (const Loop& l : find_loops(g)) m = std::max(m, l.length);
  return m;
}

}  // namespace qglab

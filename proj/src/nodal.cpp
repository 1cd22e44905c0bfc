#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "qglab/spectral.hpp"

namespace qglab {
namespace {

struct Segment {
  std::size_t edge;
  double x0, x1;
  long end0, end1;  // original vertex index, or -1 for a zero
};

std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

std::string fresh(const std::string& base, std::set<std::string>& used) {
  std::string id = base;
  for (int i = 1; used.count(id); ++i) id = base + "_" + std::to_string(i);
  used.insert(id);
  return id;
}

}  // namespace

std::vector<NodalDomain> nodal_domains(const MetricGraph& g, const Eigenpair& ep) {
  if (!(ep.k > 0.0)) throw SpectralError("nodal domains need a positive eigenvalue");
  const WaveFunction f = ep.function();
  double rmax = 0.0;
  for (const EdgeWave& w : f.waves) rmax = std::max(rmax, std::hypot(w.a, w.b));
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (std::hypot(f.waves.at(e).a, f.waves.at(e).b) <= 1e-10 * rmax)
      throw SpectralError("eigenfunction vanishes identically on edge '" + g.edge(e).id + "'");

  const double ztol = 1e-8 * rmax;
  std::vector<bool> zero(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    zero[v] = g.is_dirichlet(v) || std::abs(f.value_at(g, v)) <= ztol;

  std::vector<Segment> segs;
  const double k = f.k;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    const EdgeWave& w = f.waves[e];
    const double len = edge.length;
    const double tolx = 1e-9 * len;
    // a cos kx + b sin kx = r cos(kx - phi) vanishes at kx = phi + pi/2 + m pi
    const double phi = std::atan2(w.b, w.a);
    const double first = (phi + 0.5 * std::numbers::pi) / k;
    const double period = std::numbers::pi / k;
    std::vector<double> cuts = {0.0};
    for (double m = std::ceil((tolx - first) / period);; m += 1.0) {
      const double x = first + m * period;
      if (x >= len - tolx) break;
      if (x > tolx) cuts.push_back(x);
    }
    cuts.push_back(len);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const long a = (i == 0 && !zero[edge.u]) ? static_cast<long>(edge.u) : -1;
      const long b = (i + 2 == cuts.size() && !zero[edge.v]) ? static_cast<long>(edge.v) : -1;
      segs.push_back({e, cuts[i], cuts[i + 1], a, b});
    }
  }

  std::vector<std::size_t> parent(segs.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<long> owner(g.vertex_count(), -1);
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (long v : {segs[i].end0, segs[i].end1}) {
      if (v < 0) continue;
      if (owner[v] < 0) owner[v] = static_cast<long>(i);
      else parent[find(parent, i)] = find(parent, owner[v]);
    }

  std::vector<long> component(segs.size(), -1);
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const std::size_t r = find(parent, i);
    if (component[r] < 0) {
      component[r] = static_cast<long>(members.size());
      members.emplace_back();
    }
    members[component[r]].push_back(i);
  }

  std::vector<NodalDomain> out;
  for (const auto& list : members) {
    GraphBuilder b;
    std::set<std::string> vids;
    std::set<std::string> eids;
    for (const Vertex& v : g.vertices()) vids.insert(v.id);
    for (const Edge& e : g.edges()) eids.insert(e.id);
    int zeros = 0;
    Eigenpair restriction;
    restriction.lambda = ep.lambda;
    restriction.k = k;
    restriction.multiplicity = 1;
    restriction.normalized = false;
    std::vector<GraphPoint> origin;
    auto endpoint = [&](long v) {
      if (v >= 0) {
        const std::string& id = g.vertex(v).id;
        if (!b.has_vertex(id)) b.vertex(id);
        return id;
      }
      const std::string id = fresh("zero" + std::to_string(++zeros), vids);
      b.vertex(id, VertexCondition::Dirichlet);
      return id;
    };
    for (std::size_t i : list) {
      const Segment& s = segs[i];
      const Edge& e = g.edge(s.edge);
      const bool whole = s.x0 == 0.0 && s.x1 == e.length;
      const std::string u = endpoint(s.end0);
      const std::string v = endpoint(s.end1);
      std::string id = e.id;
      if (!whole) id = fresh(e.id + "_" + std::to_string(i), eids);
      b.edge(id, u, v, s.x1 - s.x0);
      const double a0 = f.value(s.edge, s.x0);
      const double b0 = f.derivative(s.edge, s.x0) / k;
      restriction.waves.push_back({restriction.waves.size(), a0, b0});
      origin.push_back({s.edge, s.x0});
    }
    out.push_back({b.build(), std::move(restriction), std::move(origin)});
  }
  return out;
}

}  // namespace qglab

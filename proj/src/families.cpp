#include "qglab/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qglab {
namespace {

std::string idx(const char* prefix, int i) { return prefix + std::to_string(i); }

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) throw ParameterError(std::string(what) + " must be positive");
}

double param(const std::map<std::string, double>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw ParameterError("missing parameter '" + key + "'");
  return it->second;
}

int int_param(const std::map<std::string, double>& p, const std::string& key) {
  const double v = param(p, key);
  if (v != std::floor(v)) throw ParameterError("parameter '" + key + "' must be an integer");
  return static_cast<int>(v);
}

}  // namespace

void validate(const StarParams& p) {
  if (p.n < 2) throw ParameterError("star needs n >= 2");
  require_positive(p.L, "L");
  require_positive(p.D, "D");
  if (p.D > p.L) throw ParameterError("star needs D <= L");
  if (!(p.n * p.D - p.L > 0.0)) throw ParameterError("star needs nD > L (Dirichlet edge would be degenerate)");
  if (!(p.pendant_edge() > 0.0)) throw ParameterError("star needs D < L (pendant edges would have zero length)");
}

bool shorter_edges_ok(const StarParams& p) { return p.pendant_edge() <= p.dirichlet_edge(); }

MetricGraph make_star(const StarParams& p) {
  validate(p);
  GraphBuilder b;
  b.vertex("v0", VertexCondition::Dirichlet).vertex("c");
  b.edge("e0", "v0", "c", p.dirichlet_edge());
  for (int i = 1; i <= p.n; ++i) {
    b.vertex(idx("p", i));
    b.edge(idx("e", i), "c", idx("p", i), p.pendant_edge());
  }
  return b.build();
}

MetricGraph make_star_dumbbell(const DumbbellParams& p) {
  require_positive(p.l0, "handle length");
  if (p.n < 1) throw ParameterError("dumbbell needs n >= 1");
  if (p.l1 < 0.0 || p.l2 < 0.0) throw ParameterError("pendant lengths must be nonnegative");
  GraphBuilder b;
  b.vertex("v1").vertex("v2").edge("h", "v1", "v2", p.l0);
  if (p.l1 > 0.0)
    for (int i = 1; i <= p.n; ++i) b.vertex(idx("a", i)).edge(idx("pa", i), "v1", idx("a", i), p.l1);
  if (p.l2 > 0.0)
    for (int i = 1; i <= p.n; ++i) b.vertex(idx("b", i)).edge(idx("pb", i), "v2", idx("b", i), p.l2);
  return b.build();
}

MetricGraph make_dn(double L, double D, int n) {
  require_positive(D, "D");
  if (!(D < L)) throw ParameterError("Dn needs 0 < D < L");
  if (n < 2) throw ParameterError("Dn needs n >= 2");
  if (!(n * D > L)) throw ParameterError("Dn needs nD > L");
  const double pendant = (L - D) / (2.0 * (n - 1));
  return make_star_dumbbell({(n * D - L) / (n - 1), pendant, pendant, n});
}

MetricGraph make_tn(double L, double D, int k, int n) {
  if (k < 2) throw ParameterError("Tn needs k >= 2");
  const StarParams sp{L / k, D / 2.0, n};
  validate(sp);
  GraphBuilder b;
  b.vertex("o");
  for (int i = 1; i <= k; ++i) {
    const std::string c = idx("c", i);
    b.vertex(c).edge(idx("e", i) + "_0", "o", c, sp.dirichlet_edge());
    for (int j = 1; j <= n; ++j) {
      const std::string tip = idx("t", i) + "_" + std::to_string(j);
      b.vertex(tip).edge(idx("e", i) + "_" + std::to_string(j), c, tip, sp.pendant_edge());
    }
  }
  return b.build();
}

MetricGraph make_path(double L) {
  require_positive(L, "L");
  return GraphBuilder().vertex("a").vertex("b").edge("e", "a", "b", L).build();
}

MetricGraph make_loop(double L) {
  require_positive(L, "L");
  return GraphBuilder().vertex("a").edge("e", "a", "a", L).build();
}

MetricGraph make_equilateral_star(double L, int k) {
  require_positive(L, "L");
  if (k < 1) throw ParameterError("equilateral star needs k >= 1");
  GraphBuilder b;
  b.vertex("c");
  for (int i = 1; i <= k; ++i) b.vertex(idx("p", i)).edge(idx("e", i), "c", idx("p", i), L / k);
  return b.build();
}

MetricGraph make_tadpole(double loop_length, double tail_length) {
  require_positive(loop_length, "loop length");
  require_positive(tail_length, "tail length");
  return GraphBuilder()
      .vertex("a")
      .vertex("b")
      .edge("c", "a", "a", loop_length)
      .edge("t", "a", "b", tail_length)
      .build();
}

MetricGraph make_cycle_with_pendants(double side, double pendant) {
  require_positive(side, "cycle side");
  require_positive(pendant, "pendant length");
  GraphBuilder b;
  for (int i = 1; i <= 4; ++i) b.vertex(idx("c", i)).vertex(idx("p", i));
  for (int i = 1; i <= 4; ++i) {
    b.edge(idx("s", i), idx("c", i), idx("c", i % 4 + 1), side);
    b.edge(idx("q", i), idx("c", i), idx("p", i), pendant);
  }
  return b.build();
}

MetricGraph make_basic(BasicKind kind, const std::vector<double>& params) {
  auto need = [&](std::size_t n) {
    if (params.size() != n) throw ParameterError("wrong number of parameters for basic family");
  };
  switch (kind) {
    case BasicKind::Path:
      need(1);
      return make_path(params[0]);
    case BasicKind::Loop:
      need(1);
      return make_loop(params[0]);
    case BasicKind::EquilateralStar:
      need(2);
      if (params[1] != std::floor(params[1])) throw ParameterError("k must be an integer");
      return make_equilateral_star(params[0], static_cast<int>(params[1]));
    case BasicKind::Tadpole:
      need(2);
      return make_tadpole(params[0], params[1]);
    case BasicKind::CycleWithPendants:
      need(2);
      return make_cycle_with_pendants(params[0], params[1]);
  }
  throw ParameterError("unknown basic family");
}

std::vector<std::string> family_names() {
  return {"star", "dumbbell", "Dn", "Tn", "path", "loop", "equilateral_star", "tadpole", "cycle_pendants"};
}

MetricGraph make_family(const std::string& name, const std::map<std::string, double>& p) {
  if (name == "star") return make_star({param(p, "L"), param(p, "D"), int_param(p, "n")});
  if (name == "dumbbell")
    return make_star_dumbbell({param(p, "l0"), param(p, "l1"), param(p, "l2"), int_param(p, "n")});
  if (name == "Dn") return make_dn(param(p, "L"), param(p, "D"), int_param(p, "n"));
  if (name == "Tn") return make_tn(param(p, "L"), param(p, "D"), int_param(p, "k"), int_param(p, "n"));
  if (name == "path") return make_path(param(p, "L"));
  if (name == "loop") return make_loop(param(p, "L"));
  if (name == "equilateral_star") return make_equilateral_star(param(p, "L"), int_param(p, "k"));
  if (name == "tadpole") return make_tadpole(param(p, "loop"), param(p, "tail"));
  if (name == "cycle_pendants") return make_cycle_with_pendants(param(p, "side"), param(p, "pendant"));
  throw ParameterError("unknown family '" + name + "'");
}

double star_secular(const StarParams& p, double k) {
  const double l0 = p.dirichlet_edge();
  const double l1 = p.pendant_edge();
  return std::cos(k * l0) * std::cos(k * l1) - p.n * std::sin(k * l0) * std::sin(k * l1);
}

double star_secular_root(const StarParams& p) {
  validate(p);
  const double span = p.dirichlet_edge() + p.pendant_edge();
  const double step = std::numbers::pi / (64.0 * span);
  double lo = 0.0;
  double hi = step;
  while (star_secular(p, hi) > 0.0) {
    lo = hi;
    hi += step;
  }
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (star_secular(p, mid) > 0.0) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::string canonical_form(const MetricGraph& input, bool suppress_degree_two_vertices) {
  const MetricGraph g = suppress_degree_two_vertices ? suppress_degree_two(input) : input;
  auto q = [](double x) { return std::llround(x * 1e9); };

  std::vector<std::string> vsig(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::vector<long long> inc;
    for (EdgeEnd end : g.incident(v)) inc.push_back(q(g.edge(end.edge).length) * 2 + (g.edge(end.edge).is_loop() ? 1 : 0));
    std::sort(inc.begin(), inc.end());
    std::ostringstream os;
    os << (g.is_dirichlet(v) ? 'D' : 'N') << '[';
    for (long long x : inc) os << x << ',';
    os << ']';
    vsig[v] = os.str();
  }
  std::vector<std::string> esig;
  for (const Edge& e : g.edges()) {
    auto a = vsig[e.u];
    auto b = vsig[e.v];
    if (b < a) std::swap(a, b);
    esig.push_back(std::to_string(q(e.length)) + ':' + a + '-' + b);
  }
  std::sort(esig.begin(), esig.end());
  std::ostringstream os;
  os << "V" << g.vertex_count() << "E" << g.edge_count() << ';';
  for (const auto& s : esig) os << s << ';';
  return os.str();
}

}  // namespace qglab

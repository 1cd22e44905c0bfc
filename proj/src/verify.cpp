#include "qglab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <numeric>

#include "qglab/surgery.hpp"

namespace qglab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double mu(const MetricGraph& g, std::size_t k, const SolverOptions& opts = {}) {
  return eigenvalues(g, k, opts).values.at(k - 1);
}

// First eigenvalue; the caller guarantees a Dirichlet vertex where that matters.
double mu1(const MetricGraph& g, const SolverOptions& opts = {}) { return mu(g, 1, opts); }

double star_mu1(const StarParams& p) {
  const double k = star_secular_root(p);
  return k * k;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

BoundReport base_report(const std::string& id, const MetricGraph& g) {
  BoundReport r;
  r.id = id;
  r.graph = describe(g);
  r.L = total_length(g);
  r.D = diameter(g);
  r.beta = static_cast<int>(betti(g));
  return r;
}

// Lower-bound verdict with the strict inequality relaxed by tol.
void judge_lower(BoundReport& r, double tol) {
  r.margin = r.value - r.bound;
  r.verdict = r.margin > -tol ? Verdict::Holds : Verdict::Fails;
}

bool strictly_decreasing(const std::vector<double>& xs, double min_step, double& worst) {
  worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < xs.size(); ++i) worst = std::min(worst, xs[i - 1] - xs[i]);
  return xs.size() < 2 || worst > min_step;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::HypothesisNotMet: return "hypothesis-not-met";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

MetricGraph random_graph(const RandomGraphSpec& spec) {
  if (spec.beta < 0 || spec.min_edges < 1 || spec.max_edges < spec.min_edges)
    throw ParameterError("invalid edge range or Betti number");
  if (!(spec.min_length > 0.0) || spec.max_length < spec.min_length) throw ParameterError("invalid length range");
  Rng rng(spec.seed);
  const int lo = std::max(spec.min_edges, spec.beta + 1);
  const int hi = std::max(spec.max_edges, lo);
  const int E = rng.integer(lo, hi);
  const int V = E - spec.beta + 1;

  std::vector<std::pair<int, int>> ends;
  std::vector<int> deg(V, 0);
  for (int v = 1; v < V; ++v) {
    const int u = rng.integer(0, v - 1);
    ends.emplace_back(u, v);
    ++deg[u];
    ++deg[v];
  }
  for (int i = 0; i < spec.beta; ++i) {
    int u = rng.integer(0, V - 1);
    int v = rng.integer(0, V - 1);
    if (!spec.allow_loops)
      while (v == u) v = rng.integer(0, V - 1);
    ends.emplace_back(u, v);
    ++deg[u];
    ++deg[v];
  }

  std::vector<Vertex> vs(V);
  for (int v = 0; v < V; ++v) vs[v].id = "v" + std::to_string(v);
  std::vector<int> order;
  for (int v = 0; v < V; ++v)
    if (deg[v] == 1) order.push_back(v);
  if (order.empty()) order.push_back(0);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.integer(0, static_cast<int>(i) - 1)]);
  for (int i = 0; i < spec.dirichlet_leaves && i < static_cast<int>(order.size()); ++i)
    vs[order[i]].condition = VertexCondition::Dirichlet;

  std::vector<Edge> es;
  for (int i = 0; i < E; ++i) {
    double len = rng.uniform(spec.min_length, spec.max_length);
    if (spec.jitter) len *= 1.0 + 1e-3 * rng.uniform(-1.0, 1.0);
    es.push_back({"e" + std::to_string(i), static_cast<std::size_t>(ends[i].first),
                  static_cast<std::size_t>(ends[i].second), len});
  }
  return MetricGraph(std::move(vs), std::move(es));
}

std::string describe(const MetricGraph& g) {
  return "graph(V=" + std::to_string(g.vertex_count()) + ",E=" + std::to_string(g.edge_count()) +
         ",beta=" + std::to_string(betti(g)) + ",dirichlet=" + std::to_string(g.dirichlet_vertices().size()) +
         ",L=" + fmt(total_length(g)) + ")";
}

BoundReport check_thm1(const MetricGraph& g, double tol, const SolverOptions& opts) {
  if (g.has_dirichlet()) throw ParameterError("spectral gap bound needs natural conditions everywhere");
  BoundReport r = base_report("thm1", g);
  if (!(r.D < r.L * (1.0 - 1e-12))) throw ParameterError("needs D < L; the graph is an interval");
  r.k = 2;
  r.value = mu(g, 2, opts);
  r.bound = omega_thm1(r.L, r.D).omega_squared;
  judge_lower(r, tol);
  return r;
}

BoundReport check_thm2(const MetricGraph& g, int k, double tol, const SolverOptions& opts) {
  if (k < 1) throw ParameterError("needs k >= 1");
  BoundReport r = base_report("thm2", g);
  r.k = k;
  const double gam = gamma(r.L, r.D, k, r.beta);
  const double loop = max_loop_length(g);
  r.extra = {{"gamma", gam}, {"max_loop", loop}};
  if (g.has_dirichlet()) r.note = "graph has Dirichlet vertices";
  else if (!(r.D < r.L * (1.0 - 1e-12))) r.note = "D = L";
  else if (!(gam > 0.0)) r.note = "gamma <= 0";
  else if (loop > r.D) r.note = "a loop is longer than D";
  if (!r.note.empty()) {
    r.verdict = Verdict::HypothesisNotMet;
    r.value = mu(g, k, opts);
    r.bound = kNaN;
    r.margin = kNaN;
    return r;
  }
  r.value = mu(g, k, opts);
  r.bound = omega_thm2(r.L, r.D, k, r.beta).omega_squared;
  judge_lower(r, tol);
  return r;
}

BoundReport check_nicaise(const MetricGraph& g, double tol, const SolverOptions& opts) {
  BoundReport r = base_report("nicaise", g);
  r.k = 2;
  r.value = mu(g, 2, opts);
  r.bound = kPi * kPi / (r.L * r.L);
  if (g.has_dirichlet()) {
    r.verdict = Verdict::HypothesisNotMet;
    r.note = "graph has Dirichlet vertices";
    r.margin = kNaN;
    return r;
  }
  judge_lower(r, tol);
  return r;
}

BoundReport check_friedlander(const MetricGraph& g, int k, double tol, const SolverOptions& opts) {
  if (k < 1) throw ParameterError("needs k >= 1");
  BoundReport r = base_report("friedlander", g);
  r.k = k;
  r.value = mu(g, k, opts);
  r.bound = kPi * kPi * k * k / (4.0 * r.L * r.L);
  r.variant = "corrected-candidate";
  const double printed = kPi * kPi * (k - 1) * (k - 1) / (r.L * r.L);
  r.extra = {{"printed_bound", printed}, {"printed_margin", r.value - printed}};
  if (g.has_dirichlet()) {
    r.verdict = Verdict::HypothesisNotMet;
    r.note = "graph has Dirichlet vertices";
    r.margin = kNaN;
    return r;
  }
  judge_lower(r, tol);
  return r;
}

BoundReport check_conjecture(const MetricGraph& g, int k, double tol, const SolverOptions& opts) {
  if (k < 1) throw ParameterError("needs k >= 1");
  BoundReport r = base_report("conjecture", g);
  r.k = k;
  r.value = mu(g, k, opts);
  if (g.has_dirichlet() || !(r.L / k > r.D / 2.0)) {
    r.verdict = Verdict::HypothesisNotMet;
    r.note = g.has_dirichlet() ? "graph has Dirichlet vertices" : "needs L/k > D/2";
    r.bound = kNaN;
    r.margin = kNaN;
    return r;
  }
  r.bound = omega_conjecture(r.L, r.D, k).omega_squared;
  judge_lower(r, tol);
  return r;
}

Table check_convergence_Dn(double L, double D, const std::vector<int>& ns) {
  Table t;
  t.id = "convergence_Dn";
  t.columns = {"n", "mu2_Dn", "mu1D_star", "gap", "relative_gap"};
  const double w2 = omega_thm1(L, D).omega_squared;
  std::vector<double> mus;
  std::vector<double> gaps;
  double worst_equal = 0.0;
  for (int n : ns) {
    if (!(n * D > L)) throw ParameterError("needs nD > L for every n");
    const double m2 = mu(make_dn(L, D, n), 2);
    const double star = star_mu1({L / 2.0, D / 2.0, n});
    mus.push_back(m2);
    gaps.push_back(m2 - w2);
    worst_equal = std::max(worst_equal, std::abs(m2 - star));
    t.rows.push_back({static_cast<double>(n), m2, star, m2 - w2, (m2 - w2) / w2});
  }
  double step = 0.0;
  double gap_step = 0.0;
  const bool dec = strictly_decreasing(mus, 0.0, step);
  const bool gap_dec = strictly_decreasing(gaps, 0.0, gap_step);
  const bool positive = std::all_of(gaps.begin(), gaps.end(), [](double x) { return x > 0.0; });
  t.margin = mus.size() > 1 ? step : (gaps.empty() ? 0.0 : gaps.front());
  t.verdict = dec && gap_dec && positive && worst_equal <= 1e-9 ? Verdict::Holds : Verdict::Fails;
  t.note = "omega^2 = " + fmt(w2) + "; max |mu2(Dn) - mu1D(star)| = " + fmt(worst_equal);
  return t;
}

Table star_monotonicity_n(double L, double D, const std::vector<int>& ns) {
  Table t;
  t.id = "star_monotone_n";
  t.columns = {"n", "mu1D"};
  std::vector<double> mus;
  for (int n : ns) {
    const StarParams p{L, D, n};
    validate(p);
    mus.push_back(mu1(make_star(p)));
    t.rows.push_back({static_cast<double>(n), mus.back()});
  }
  const bool ok = strictly_decreasing(mus, 1e-9, t.margin);
  t.verdict = ok ? Verdict::Holds : Verdict::Fails;
  t.note = "L = " + fmt(L) + ", D = " + fmt(D);
  return t;
}

Table star_monotonicity_D(double L, int n, const std::vector<double>& Ds) {
  Table t;
  t.id = "star_monotone_D";
  t.columns = {"D", "mu1D"};
  std::vector<double> mus;
  for (double D : Ds) {
    const StarParams p{L, D, n};
    validate(p);
    mus.push_back(mu1(make_star(p)));
    t.rows.push_back({D, mus.back()});
  }
  const bool ok = strictly_decreasing(mus, 1e-9, t.margin);
  t.verdict = ok ? Verdict::Holds : Verdict::Fails;
  t.note = "L = " + fmt(L) + ", n = " + std::to_string(n);
  return t;
}

Table star_longer_witness(double L, double L_long, double D, int n) {
  Table t;
  t.id = "star_longer_witness";
  t.columns = {"n1", "mu1D"};
  const StarParams base{L, D, n};
  validate(base);
  const double target = star_mu1(base);
  t.verdict = Verdict::Inconclusive;
  t.note = "no witness up to n1 = 512";
  for (int n1 = std::max(n, 2); n1 <= 512; ++n1) {
    const StarParams p{L_long, D, n1};
    if (!(n1 * D > L_long)) continue;
    const double m = star_mu1(p);
    t.rows.push_back({static_cast<double>(n1), m});
    if (m < target - 1e-9) {
      t.verdict = Verdict::Holds;
      t.margin = target - m;
      t.note = "witness n1 = " + std::to_string(n1) + " against mu1D = " + fmt(target);
      break;
    }
  }
  return t;
}

std::vector<Table> check_star_monotonicity(double L, const std::vector<double>& Ds, const std::vector<int>& ns) {
  if (Ds.empty() || ns.empty()) throw ParameterError("needs at least one D and one n");
  std::vector<Table> out;
  for (double D : Ds) out.push_back(star_monotonicity_n(L, D, ns));
  for (int n : ns) out.push_back(star_monotonicity_D(L, n, Ds));
  out.push_back(star_longer_witness(L, 1.2 * L, Ds.front(), ns.front()));
  return out;
}

Table check_dumbbell_balance(double l0, double l, int n, int grid) {
  if (!(l > 0.0 && l0 >= l)) throw ParameterError("needs l0 >= l > 0");
  if (n < 1 || grid < 3) throw ParameterError("needs n >= 1 and at least 3 grid points");
  Table t;
  t.id = "dumbbell_balance";
  t.columns = {"l1", "mu2", "pruefer_slope", "fd_slope"};
  const double h = 1e-4;
  auto mu2_at = [&](double l1) { return mu(make_star_dumbbell({l0, l1, l - l1, n}), 2); };
  std::vector<double> mus;
  double worst_slope = 0.0;
  bool signs_ok = true;
  bool slopes_known = true;
  for (int i = 0; i < grid; ++i) {
    const double l1 = l * i / (grid - 1);
    const double m = mu2_at(l1);
    mus.push_back(m);
    double pr = kNaN;
    double fd = kNaN;
    if (i > 0 && i + 1 < grid) {
      const MetricGraph g = make_star_dumbbell({l0, l1, l - l1, n});
      try {
        const auto d = hadamard_derivatives(g, m);
        pr = 0.0;
        for (int j = 1; j <= n; ++j) {
          pr += d[g.edge_index("pa" + std::to_string(j))];
          pr -= d[g.edge_index("pb" + std::to_string(j))];
        }
      } catch (const SpectralError&) {
        slopes_known = false;
      }
      fd = (mu2_at(l1 + h) - mu2_at(l1 - h)) / (2.0 * h);
      if (!std::isnan(pr)) worst_slope = std::max(worst_slope, std::abs(pr - fd));
      const double mid = l / 2.0;
      if (l1 < mid - 1e-12 && !(fd < 0.0)) signs_ok = false;
      if (l1 > mid + 1e-12 && !(fd > 0.0)) signs_ok = false;
    }
    t.rows.push_back({l1, m, pr, fd});
  }
  const auto argmin = static_cast<int>(std::min_element(mus.begin(), mus.end()) - mus.begin());
  double asym = 0.0;
  for (int i = 0; i < grid; ++i) asym = std::max(asym, std::abs(mus[i] - mus[grid - 1 - i]));
  const bool centred = grid % 2 == 1 ? argmin == grid / 2 : (argmin == grid / 2 || argmin == grid / 2 - 1);
  // distance of the minimum from its nearest competitor
  double sep = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i)
    if (std::abs(i - (grid - 1) / 2.0) > 0.5) sep = std::min(sep, mus[i] - mus[argmin]);
  t.margin = sep;
  const bool ok = centred && asym <= 1e-9 && signs_ok && worst_slope <= 1e-5;
  t.verdict = ok ? Verdict::Holds : (slopes_known ? Verdict::Fails : Verdict::Inconclusive);
  t.note = "argmin l1 = " + fmt(l * argmin / (grid - 1)) + "; max asymmetry = " + fmt(asym) +
           "; max |pruefer - fd| = " + fmt(worst_slope);
  return t;
}

BoundReport check_symmetrisation(const StarParams& s1, const StarParams& s2) {
  if (s1.n != s2.n) throw ParameterError("both stars need the same n");
  validate(s1);
  validate(s2);
  const int n = s1.n;
  const StarParams mid{(s1.L + s2.L) / 2.0, (s1.D + s2.D) / 2.0, n};
  const MetricGraph dstar = make_dn(s1.L + s2.L, s1.D + s2.D, n);
  BoundReport r = base_report("symmetrisation", dstar);
  r.k = 2;
  const double m1 = mu1(make_star(s1));
  const double m2 = mu1(make_star(s2));
  const double mid_star = mu1(make_star(mid));
  r.value = std::max(m1, m2);
  r.bound = mu(dstar, 2);
  const double equal_gap = std::abs(r.bound - mid_star);
  r.extra = {{"mu1D_S1", m1},
             {"mu1D_S2", m2},
             {"mu1D_Sstar", mid_star},
             {"equality_gap", equal_gap},
             {"shorter_edges_S1", shorter_edges_ok(s1) ? 1.0 : 0.0},
             {"shorter_edges_S2", shorter_edges_ok(s2) ? 1.0 : 0.0}};
  r.margin = r.value - r.bound;
  r.verdict = r.margin > -1e-9 && equal_gap <= 1e-9 ? Verdict::Holds : Verdict::Fails;
  return r;
}

BoundReport check_key_lemma(const MetricGraph& h, const SolverOptions& opts) {
  if (!h.has_dirichlet()) throw ParameterError("needs a nonempty Dirichlet set");
  BoundReport r = base_report("key_lemma", h);
  const double L = r.L;
  const double d = dirichlet_eccentricity(h);
  r.D = d;
  r.value = mu1(h, opts);
  r.extra = {{"eccentricity", d}};
  if (!(d < L * (1.0 - 1e-12))) {
    // every admissible star degenerates to the interval
    r.bound = kPi * kPi / (4.0 * L * L);
    r.margin = r.value - r.bound;
    r.verdict = std::abs(r.margin) <= 1e-9 * (1.0 + r.value) ? Verdict::Holds : Verdict::Fails;
    r.note = "interval equality case: L = d";
    return r;
  }
  const int n_min = std::max(2, static_cast<int>(std::floor(L / d)) + 1);
  auto star = [&](int n) { return star_mu1({L, d, n}); };
  auto ok = [&](int n) { return star(n) <= r.value + 1e-9; };
  int found = -1;
  if (ok(n_min)) {
    found = n_min;
  } else {
    int bad = n_min;
    int n = n_min;
    while (n < 512) {
      n = std::min(2 * n, 512);
      if (ok(n)) break;
      bad = n;
    }
    if (ok(n)) {
      int good = n;
      while (good - bad > 1) {
        const int mid = bad + (good - bad) / 2;
        (ok(mid) ? good : bad) = mid;
      }
      found = good;
    }
  }
  if (found < 0) {
    r.verdict = Verdict::Inconclusive;
    r.bound = star(512);
    r.margin = r.value - r.bound;
    r.note = "search cap n = 512 exceeded";
    return r;
  }
  r.k = found;
  r.bound = star(found);
  r.margin = r.value - r.bound;
  r.verdict = Verdict::Holds;
  r.extra.push_back({"n0", static_cast<double>(found)});
  // first n with a strictly smaller star value
  int strict = found;
  while (strict <= 512 && !(star(strict) < r.value - 1e-9)) ++strict;
  r.extra.push_back({"n_strict", strict <= 512 ? static_cast<double>(strict) : kNaN});
  if (found <= 64) r.extra.push_back({"star_solver_gap", std::abs(mu1(make_star({L, d, found}), opts) - r.bound)});
  r.note = "witness n0 = " + std::to_string(found);
  return r;
}

std::vector<BoundReport> explore_conjecture(const RandomGraphSpec& spec, int k, int samples,
                                            const std::string& out_dir) {
  std::vector<BoundReport> out;
  for (int i = 0; i < samples; ++i) {
    RandomGraphSpec s = spec;
    s.seed = spec.seed * 1000003ULL + static_cast<std::uint64_t>(i);
    const MetricGraph g = random_graph(s);
    BoundReport r = check_conjecture(g, k);
    r.id = "conjecture/" + std::to_string(i);
    if (r.verdict == Verdict::Fails && !out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      const std::string path = out_dir + "/counterexample_k" + std::to_string(k) + "_" + std::to_string(i) + ".mgf";
      std::ofstream(path) << to_mgf(g);
      r.note = "counterexample written to " + path;
    }
    out.push_back(std::move(r));
  }
  return out;
}

Table friedlander_resolution(double L, int kmax) {
  Table t;
  t.id = "friedlander_resolution";
  t.columns = {"k", "mu_k_star", "printed", "corrected", "diff_printed", "diff_corrected"};
  double worst = 0.0;
  int printed_fail = 0;
  for (int k = 2; k <= kmax; ++k) {
    const double m = mu(make_equilateral_star(L, k), static_cast<std::size_t>(k));
    const double printed = kPi * kPi * (k - 1) * (k - 1) / (L * L);
    const double corrected = kPi * kPi * k * k / (4.0 * L * L);
    worst = std::max(worst, std::abs(m - corrected));
    if (m < printed - 1e-9) ++printed_fail;
    t.rows.push_back({static_cast<double>(k), m, printed, corrected, m - printed, m - corrected});
  }
  t.margin = -worst;
  t.verdict = worst <= 1e-9 * (1.0 + kPi * kPi * kmax * kmax / (4.0 * L * L)) ? Verdict::Holds : Verdict::Fails;
  t.note = "equilateral star attains pi^2 k^2/(4L^2); printed constant exceeds it for " +
           std::to_string(printed_fail) + " of " + std::to_string(kmax - 1) + " values of k";
  return t;
}

BoundReport check_nodal_count(const MetricGraph& g, int k, const SolverOptions& opts) {
  if (k < 2) throw ParameterError("nodal count needs k >= 2");
  BoundReport r = base_report("nodal_count", g);
  r.k = k;
  const Spectrum s = eigenvalues(g, static_cast<std::size_t>(k) + 1, opts);
  const double lam = s.values[k - 1];
  r.value = kNaN;
  r.bound = static_cast<double>(k - r.beta);
  r.margin = kNaN;
  r.extra = {{"mu_k", lam}};
  const double sep = 1e-7 * (1.0 + lam);
  if (g.has_dirichlet()) r.note = "graph has Dirichlet vertices";
  else if (!(lam - s.values[k - 2] > sep && s.values[k] - lam > sep)) r.note = "mu_k is not simple";
  if (!r.note.empty()) {
    r.verdict = Verdict::HypothesisNotMet;
    return r;
  }
  const Eigenpair ep = eigenfunctions(g, lam, opts).front();
  double scale = 0.0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) scale = std::max(scale, max_abs_on_edge(g, ep.function(), e));
  double vmin = std::numeric_limits<double>::infinity();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) vmin = std::min(vmin, std::abs(ep.function().value_at(g, v)));
  r.extra.push_back({"min_vertex_value", vmin / scale});
  if (!(vmin > 1e-6 * scale)) {
    r.verdict = Verdict::HypothesisNotMet;
    r.note = "eigenfunction vanishes at a vertex";
    return r;
  }
  const auto domains = nodal_domains(g, ep);
  const int m = static_cast<int>(domains.size());
  double worst = 0.0;
  for (const NodalDomain& d : domains) worst = std::max(worst, std::abs(mu1(d.graph, opts) - lam));
  r.value = m;
  r.margin = std::min(m - (k - r.beta), k - m);
  r.extra.push_back({"max_domain_gap", worst});
  r.verdict = r.margin >= 0 && worst <= 1e-8 ? Verdict::Holds : Verdict::Fails;
  r.note = std::to_string(m) + " nodal domains";
  return r;
}

BoundReport check_partition(const MetricGraph& g, const std::vector<GraphPoint>& points, const SolverOptions& opts) {
  BoundReport r = base_report("partition", g);
  const auto pieces = split_at_points(g, points, true);
  const auto m = pieces.size();
  r.k = static_cast<int>(m);
  r.value = mu(g, m, opts);
  r.bound = 0.0;
  for (const MetricGraph& p : pieces) r.bound = std::max(r.bound, mu1(p, opts));
  r.margin = r.bound - r.value;
  r.verdict = r.margin > -kVerifyTol ? Verdict::Holds : Verdict::Fails;
  r.variant = "upper";
  return r;
}

BoundReport check_hadamard(const MetricGraph& g, std::size_t edge, double h, const SolverOptions& opts) {
  BoundReport r = base_report("hadamard", g);
  const std::size_t idx = g.has_dirichlet() ? 1 : 2;
  r.k = static_cast<int>(idx);
  const Spectrum s = eigenvalues(g, idx + 1, opts);
  const double lam = s.values[idx - 1];
  const double len = g.edge(edge).length;
  const double sep = 1e-6 * (1.0 + lam);
  const bool simple = s.values[idx] - lam > sep && (idx == 1 || lam - s.values[idx - 2] > sep);
  if (!simple || !(len > 2.0 * h)) {
    r.verdict = Verdict::HypothesisNotMet;
    r.note = simple ? "edge shorter than 2h" : "eigenvalue is not simple";
    r.value = r.bound = r.margin = kNaN;
    return r;
  }
  r.bound = hadamard_derivative(g, lam, edge, opts);
  r.value = (mu(g.with_edge_length(edge, len + h), idx, opts) - mu(g.with_edge_length(edge, len - h), idx, opts)) /
            (2.0 * h);
  r.margin = 1e-5 - std::abs(r.value - r.bound);
  r.verdict = r.margin >= 0.0 ? Verdict::Holds : Verdict::Fails;
  r.extra = {{"mu", lam}, {"edge", static_cast<double>(edge)}};
  r.variant = "pruefer";
  return r;
}

BoundReport check_glue(const MetricGraph& g, std::size_t v1, std::size_t v2, const SolverOptions& opts) {
  const MetricGraph glued = glue(g, v1, v2);
  BoundReport r = base_report("glue", g);
  const Spectrum before = eigenvalues(g, 5, opts);
  const Spectrum after = eigenvalues(glued, 5, opts);
  r.k = 2;
  r.value = after.values[1];
  r.bound = before.values[1];
  r.margin = std::numeric_limits<double>::infinity();
  for (std::size_t j = 1; j < 5; ++j) {
    r.margin = std::min(r.margin, after.values[j] - before.values[j]);
    r.extra.push_back({"mu" + std::to_string(j + 1) + "_gain", after.values[j] - before.values[j]});
  }
  r.verdict = r.margin > -kVerifyTol * (1.0 + before.values[4]) ? Verdict::Holds : Verdict::Fails;
  return r;
}

BoundReport check_lengthen(const MetricGraph& g, std::size_t edge, double delta, const SolverOptions& opts) {
  BoundReport r = base_report("lengthen", g);
  const std::size_t idx = g.has_dirichlet() ? 1 : 2;
  r.k = static_cast<int>(idx);
  const Spectrum s = eigenvalues(g, idx + 1, opts);
  const double lam = s.values[idx - 1];
  r.bound = lam;
  r.value = mu(lengthen(g, edge, delta), idx, opts);
  r.margin = r.bound - r.value;
  bool strict = false;
  if (s.values[idx] - lam > 1e-6 * (1.0 + lam) && (idx == 1 || lam - s.values[idx - 2] > 1e-6 * (1.0 + lam))) {
    const Eigenpair ep = eigenfunctions(g, lam, opts).front();
    double scale = 0.0;
    for (std::size_t e = 0; e < g.edge_count(); ++e) scale = std::max(scale, max_abs_on_edge(g, ep.function(), e));
    strict = max_abs_on_edge(g, ep.function(), edge) > 1e-6 * scale;
  }
  r.extra = {{"strict_expected", strict ? 1.0 : 0.0}, {"delta", delta}};
  const double tol = kVerifyTol * (1.0 + lam);
  r.verdict = r.margin > (strict ? 0.0 : -tol) ? Verdict::Holds : Verdict::Fails;
  r.variant = "upper";
  return r;
}

WaveFunction positive_ground_state(const MetricGraph& g, const SolverOptions& opts) {
  if (!g.has_dirichlet()) throw ParameterError("ground state needs a Dirichlet vertex");
  WaveFunction f = eigenfunctions(g, mu1(g, opts), opts).front().function();
  WaveFunction neg = f;
  for (auto& w : neg.waves) w.a = -w.a, w.b = -w.b;
  double hi = 0.0;
  double lo = 0.0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    hi = std::max(hi, max_on_edge(g, f, e));
    lo = std::min(lo, -max_on_edge(g, neg, e));
  }
  return -lo > hi ? neg : f;
}

BoundReport check_transplant(const MetricGraph& g, const std::vector<std::size_t>& delete_edges, std::size_t v,
                             const SolverOptions& opts) {
  if (!g.has_dirichlet()) throw ParameterError("transplantation check needs a Dirichlet vertex");
  BoundReport r = base_report("transplant", g);
  r.k = 1;
  r.variant = "upper";
  const double lam = mu1(g, opts);
  r.bound = lam;
  const WaveFunction f = positive_ground_state(g, opts);
  double scale = 0.0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) scale = std::max(scale, max_on_edge(g, f, e));
  double sup = -std::numeric_limits<double>::infinity();
  double removed = 0.0;
  for (std::size_t e : delete_edges) {
    sup = std::max(sup, max_on_edge(g, f, e));
    removed += g.edge(e).length;
  }
  const double at_v = f.value_at(g, v);
  r.extra = {{"sup_deleted", sup}, {"psi_v", at_v}, {"length", removed}};
  if (delete_edges.empty() || !(sup <= at_v + 1e-9 * scale)) {
    r.verdict = Verdict::HypothesisNotMet;
    r.note = "transplantation condition fails";
    r.value = r.margin = kNaN;
    return r;
  }
  TransplantPlan plan;
  plan.delete_edges = delete_edges;
  plan.vertex = v;
  plan.pendants = {removed};
  const MetricGraph after = transplant(g, plan);
  r.value = mu1(after, opts);
  r.margin = r.bound - r.value;
  r.verdict = r.margin > -kVerifyTol * (1.0 + lam) ? Verdict::Holds : Verdict::Fails;
  return r;
}

std::vector<Table> discrepancy_report() {
  std::vector<Table> out;
  out.push_back(friedlander_resolution(1.0, 5));

  const std::vector<double> Ls = {1.0, 1.5, 2.0, 3.0};
  const std::vector<double> fracs = {0.2, 0.4, 0.6, 0.8, 1.0};

  Table prop;
  prop.id = "star_bounds_readings";
  prop.columns = {"L", "D", "omega_star_sq", "printed_lower", "printed_upper", "printed_ok",
                  "doubled_lower", "doubled_upper", "doubled_ok"};
  int printed_fail = 0;
  int doubled_fail = 0;
  prop.margin = std::numeric_limits<double>::infinity();
  for (double L : Ls)
    for (double f : fracs) {
      const double D = f * L;
      const double w2 = omega_star(L, D).omega_squared;
      const auto c = closed_form_bounds("prop14", {{"L", L}, {"D", D}});
      const bool pok = c[0].value <= w2 && w2 <= c[1].value;
      const bool dok = c[2].value <= w2 && w2 <= c[3].value;
      printed_fail += !pok;
      doubled_fail += !dok;
      prop.margin = std::min({prop.margin, w2 - c[2].value, c[3].value - w2});
      prop.rows.push_back({L, D, w2, c[0].value, c[1].value, pok ? 1.0 : 0.0, c[2].value, c[3].value, dok ? 1.0 : 0.0});
    }
  prop.verdict = doubled_fail == 0 ? Verdict::Holds : Verdict::Fails;
  prop.note = "literal reading fails on " + std::to_string(printed_fail) + " of " + std::to_string(prop.rows.size()) +
              " points; doubled reading fails on " + std::to_string(doubled_fail);
  out.push_back(std::move(prop));

  Table w;
  w.id = "wentzell_readings";
  w.columns = {"L", "D", "omega_star_sq", "printed_mass_sq", "full_mass_sq", "diff_printed", "diff_full"};
  double worst = 0.0;
  for (double L : Ls)
    for (double f : fracs) {
      const double D = f * L;
      const double w2 = omega_star(L, D).omega_squared;
      const auto c = closed_form_bounds("wentzell", {{"L", L}, {"D", D}});
      worst = std::max(worst, std::abs(c[1].value - w2));
      w.rows.push_back({L, D, w2, c[0].value, c[1].value, c[0].value - w2, c[1].value - w2});
    }
  w.margin = -worst;
  w.verdict = worst <= 1e-12 ? Verdict::Holds : Verdict::Fails;
  w.note = "mass L - D reproduces the star limit; the printed mass (L - D)/2 does not unless D = L";
  out.push_back(std::move(w));
  return out;
}

}  // namespace qglab

#include "qglab/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include "qglab/fem.hpp"

namespace qglab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeroLambda = 1e-14;

// Value and outgoing derivative / k of the wave (a, b) at one end of an edge,
// as coefficient pairs against (a, b).
struct EndRow {
  double va, vb;  // value
  double da, db;  // outgoing derivative divided by k
};

EndRow end_row(double k, double len, int side) {
  if (side == 0) return {1.0, 0.0, 0.0, 1.0};
  const double c = std::cos(k * len);
  const double s = std::sin(k * len);
  // u(l) = a c + b s ; -u'(l)/k = a s - b c
  return {c, s, s, -c};
}

double integral_cos(double w, double len) {
  const double x = w * len;
  if (std::abs(x) < 1e-4) return len * (1.0 - x * x / 6.0 + x * x * x * x / 120.0);
  return std::sin(x) / w;
}

double integral_sin(double w, double len) {
  const double x = w * len;
  if (std::abs(x) < 1e-4) return len * x * 0.5 * (1.0 - x * x / 12.0);
  const double h = std::sin(0.5 * x);
  return 2.0 * h * h / w;
}

// Integral over [0, len] of (a1 cos k1x + b1 sin k1x)(a2 cos k2x + b2 sin k2x).
double wave_product(double k1, double a1, double b1, double k2, double a2, double b2, double len) {
  const double dm = k1 - k2;
  const double sp = k1 + k2;
  const double cd = integral_cos(dm, len);
  const double cs = integral_cos(sp, len);
  const double sd = integral_sin(dm, len);
  const double ss = integral_sin(sp, len);
  return 0.5 * (a1 * a2 * (cd + cs) + b1 * b2 * (cd - cs) + a1 * b2 * (ss - sd) + b1 * a2 * (ss + sd));
}

// L2 Gram matrix of the 2E coefficient basis at wavenumber k.
Eigen::MatrixXd coefficient_gram(const MetricGraph& g, double k) {
  const std::size_t n = 2 * g.edge_count();
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const double len = g.edge(e).length;
    w(2 * e, 2 * e) = wave_product(k, 1, 0, k, 1, 0, len);
    w(2 * e + 1, 2 * e + 1) = wave_product(k, 0, 1, k, 0, 1, len);
    w(2 * e, 2 * e + 1) = w(2 * e + 1, 2 * e) = wave_product(k, 1, 0, k, 0, 1, len);
  }
  return w;
}

void normalize_sign(std::vector<EdgeWave>& waves) {
  double scale = 0.0;
  for (const EdgeWave& w : waves) scale = std::max({scale, std::abs(w.a), std::abs(w.b)});
  for (const EdgeWave& w : waves) {
    for (double c : {w.a, w.b}) {
      if (std::abs(c) > 1e-10 * scale) {
        if (c < 0.0)
          for (EdgeWave& x : waves) {
            x.a = -x.a;
            x.b = -x.b;
          }
        return;
      }
    }
  }
}

// Sorted memo of counting-function evaluations shared by all bisections.
class Counter {
 public:
  explicit Counter(const MetricGraph& g) : g_(g) {}

  std::size_t operator()(double k) {
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    ++evaluations;
    std::size_t n = eigenvalue_count(g_, k);
    if (!g_.has_dirichlet()) n = std::max<std::size_t>(n, 1);
    memo_.emplace(k, n);
    return n;
  }

  // Tightest known bracket (lo, hi] with count(lo) < j <= count(hi).
  std::pair<double, double> bracket(std::size_t j) const {
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    for (const auto& [k, n] : memo_) {
      if (n < j) lo = std::max(lo, k);
      else hi = std::min(hi, k);
    }
    return {lo, hi};
  }

  // Wavenumber of the j-th eigenvalue (1-based, with multiplicity) among the
  // positive ones counted by the counting function.
  double locate(std::size_t j, double rel_tol) {
    auto [lo, hi] = bracket(j);
    while (true) {
      const double mid = 0.5 * (lo + hi);
      if (hi - lo <= rel_tol * (1.0 + hi) || mid <= lo || mid >= hi) break;
      if ((*this)(mid) < j) lo = mid;
      else hi = mid;
    }
    return 0.5 * (lo + hi);
  }

  std::size_t evaluations = 0;

 private:
  const MetricGraph& g_;
  std::map<double, std::size_t> memo_;
};

double first_upper(const MetricGraph& g, Counter& count, std::size_t needed) {
  double hi = kPi * static_cast<double>(needed + g.vertex_count() + 2) / total_length(g);
  while (count(hi) < needed) hi *= 2.0;
  return hi;
}

// Groups located wavenumbers into levels. With a counter the last level is
// completed to its full multiplicity.
Spectrum assemble_spectrum(const std::vector<double>& ks, std::size_t count, double rel_tol, Counter* counter) {
  Spectrum sp;
  for (std::size_t i = 0; i < count; ++i) sp.values.push_back(ks[i] * ks[i]);
  std::size_t i = 0;
  while (i < ks.size() && i < count) {
    const double k = ks[i];
    const double delta = std::max(1e-9 * (1.0 + k), 100.0 * rel_tol * (1.0 + k));
    std::size_t j = i;
    while (j < ks.size() && ks[j] - k <= delta) ++j;
    int mult = static_cast<int>(j - i);
    if (counter && j == ks.size() && k > 0.0) mult = static_cast<int>((*counter)(k + delta) - (*counter)(k - delta));
    sp.levels.push_back({k * k, std::max(mult, 1)});
    for (std::size_t t = i; t < std::min(j, count); ++t) sp.values[t] = k * k;
    i = j;
  }
  return sp;
}

std::vector<double> locate_inertia(const MetricGraph& g, std::size_t count, const SolverOptions& opts,
                                   Counter& counter, SolverDiagnostics& diag) {
  std::vector<double> ks;
  std::size_t start = 1;
  if (!g.has_dirichlet()) {
    ks.push_back(0.0);
    start = 2;
  }
  if (count >= start) {
    first_upper(g, counter, count);
    for (std::size_t j = start; j <= count; ++j) ks.push_back(counter.locate(j, opts.tol_k));
  }
  diag.brackets = ks.size();
  return ks;
}

double golden_minimize(const std::function<double(double)>& f, double a, double b, double rel_tol, double& fmin) {
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - r * (b - a);
  double d = a + r * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > rel_tol * (1.0 + std::abs(b))) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
    if (d <= c) break;
  }
  if (fc < fd) {
    fmin = fc;
    return c;
  }
  fmin = fd;
  return d;
}

// Rows of the scaled matrix have nominal norm 1, which serves as the matrix
// scale; the actual norm can vanish (loops at their eigenvalues).
int nullity(const MetricGraph& g, double k, double tol_rank) {
  const Eigen::MatrixXd a = scaled_secular_matrix(g, k);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& s = svd.singularValues();
  const double thresh = tol_rank;
  int n = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) <= thresh) ++n;
  return n;
}

std::vector<double> locate_scan(const MetricGraph& g, std::size_t count, const SolverOptions& opts, Counter& counter,
                                SolverDiagnostics& diag) {
  std::vector<std::pair<double, int>> roots;  // (k, multiplicity)
  const double step = kPi / (8.0 * total_length(g));
  diag.scan_step = step;
  std::size_t svds = 0;
  auto sv = [&](double k) {
    ++svds;
    return secular_value(g, k);
  };
  auto add = [&](double k, int m) {
    for (auto& [k_old, m_old] : roots)
      if (std::abs(k - k_old) <= 1e-9 * (1.0 + k)) {
        m_old = std::max(m_old, m);
        return;
      }
    roots.emplace_back(k, m);
  };

  const std::size_t zero = g.has_dirichlet() ? 0 : 1;
  auto found_in = [&](double a, double b) {
    std::size_t n = 0;
    for (const auto& [k, m] : roots)
      if (k > a && k < b) n += static_cast<std::size_t>(m);
    return n;
  };

  // Minimizes over the bracket [a, b]. When the counting function sees more
  // eigenvalues in the bracket than have been found (two roots sharing one
  // dip, or a root just outside a dip's bracket), the bracket is rescanned on
  // a finer grid.
  std::function<void(double, double, int)> resolve = [&](double a, double b, int depth) {
    double fmin = 0.0;
    const double kr = golden_minimize(sv, a, b, 1e-15, fmin);
    diag.max_secular_value = std::max(diag.max_secular_value, fmin);
    if (fmin < opts.accept_threshold) {
      ++diag.brackets;
      add(kr, std::max(1, nullity(g, kr, opts.tol_rank)));
    }
    if (depth >= 6 || found_in(a, b) >= counter(b) - counter(a)) return;
    constexpr int kSub = 16;
    const double h = (b - a) / kSub;
    std::vector<double> x(kSub + 3), f(kSub + 3);
    for (int j = 0; j < kSub + 3; ++j) {
      x[j] = std::max(a + (j - 1) * h, 1e-3 * h);
      f[j] = sv(x[j]);
    }
    for (int j = 1; j <= kSub + 1; ++j)
      if (f[j] <= f[j - 1] && f[j] <= f[j + 1]) resolve(x[j - 1], x[j + 1], depth + 1);
  };

  double k0 = 1e-3 * step;
  double k1 = k0 + step;
  double f0 = sv(k0);
  double f1 = sv(k1);
  double checked = k0;  // counts agree below this wavenumber
  const std::size_t max_steps = 200000;
  for (std::size_t it = 0; zero + found_in(0.0, k1) < count && it < max_steps; ++it) {
    const double k2 = k1 + step;
    const double f2 = sv(k2);
    if (f1 <= f0 && f1 <= f2) resolve(k0, k2, 0);
    if (zero + found_in(0.0, k1) < counter(k1)) resolve(checked, k1, 0);
    if (zero + found_in(0.0, k1) >= counter(k1)) checked = k1;
    k0 = k1;
    f0 = f1;
    k1 = k2;
    f1 = f2;
  }
  diag.svd_evaluations += svds;

  std::sort(roots.begin(), roots.end());
  std::vector<double> ks;
  if (!g.has_dirichlet()) ks.push_back(0.0);
  for (const auto& [k, m] : roots)
    for (int r = 0; r < m; ++r) ks.push_back(k);
  return ks;
}

void fem_cross_check(const MetricGraph& g, Spectrum& sp, const SolverOptions& opts) {
  const auto fem = fem_eigenvalues(g, sp.values.size(), opts.fem_h);
  double worst = 0.0;
  bool ok = true;
  for (std::size_t i = 0; i < fem.size(); ++i) {
    const double delta = std::abs(fem[i].extrapolated - sp.values[i]);
    worst = std::max(worst, delta);
    if (delta > fem[i].tolerance()) ok = false;
  }
  sp.diagnostics.fem_delta = worst;
  sp.diagnostics.fem_consistent = ok;
  if (!ok) sp.diagnostics.warnings.push_back("exact and finite-element eigenvalues disagree beyond the error estimate");
}

}  // namespace

double WaveFunction::value(std::size_t edge, double x) const {
  const EdgeWave& w = waves.at(edge);
  if (k == 0.0) return w.a;
  return w.a * std::cos(k * x) + w.b * std::sin(k * x);
}

double WaveFunction::derivative(std::size_t edge, double x) const {
  const EdgeWave& w = waves.at(edge);
  if (k == 0.0) return 0.0;
  return k * (-w.a * std::sin(k * x) + w.b * std::cos(k * x));
}

double WaveFunction::value_at(const MetricGraph& g, std::size_t vertex) const {
  const EdgeEnd end = g.incident(vertex).front();
  return value(end.edge, end.side == 0 ? 0.0 : g.edge(end.edge).length);
}

Eigen::MatrixXd secular_matrix(const MetricGraph& g, double k) {
  if (!(k > 0.0)) throw SpectralError("secular matrix needs k > 0");
  const std::size_t n = 2 * g.edge_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  std::size_t row = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& ends = g.incident(v);
    auto rowof = [&](EdgeEnd end) { return end_row(k, g.edge(end.edge).length, end.side); };
    if (g.is_dirichlet(v)) {
      for (EdgeEnd end : ends) {
        const EndRow r = rowof(end);
        a(row, 2 * end.edge) += r.va;
        a(row, 2 * end.edge + 1) += r.vb;
        ++row;
      }
      continue;
    }
    const EndRow r0 = rowof(ends.front());
    for (std::size_t i = 1; i < ends.size(); ++i) {
      const EndRow r = rowof(ends[i]);
      a(row, 2 * ends[i].edge) += r.va;
      a(row, 2 * ends[i].edge + 1) += r.vb;
      a(row, 2 * ends.front().edge) -= r0.va;
      a(row, 2 * ends.front().edge + 1) -= r0.vb;
      ++row;
    }
    for (EdgeEnd end : ends) {
      const EndRow r = rowof(end);
      a(row, 2 * end.edge) += r.da;
      a(row, 2 * end.edge + 1) += r.db;
    }
    ++row;
  }
  return a;
}

Eigen::MatrixXd scaled_secular_matrix(const MetricGraph& g, double k) {
  Eigen::MatrixXd a = secular_matrix(g, k);
  // Each row is a signed sum of end rows of unit norm; dividing by the square
  // root of the number of terms gives rows of norm at most 1 without making
  // the scale depend on k (a loop's rows vanish identically at its eigenvalues).
  Eigen::Index row = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const std::size_t d = g.degree(v);
    if (g.is_dirichlet(v)) {
      row += static_cast<Eigen::Index>(d);
      continue;
    }
    for (std::size_t i = 1; i < d; ++i) a.row(row++) /= std::sqrt(2.0);
    a.row(row++) /= std::sqrt(static_cast<double>(d));
  }
  return a;
}

double secular_value(const MetricGraph& g, double k) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(scaled_secular_matrix(g, k));
  const auto& s = svd.singularValues();
  return s(s.size() - 1);
}

std::size_t eigenvalue_count(const MetricGraph& g, double k) {
  if (!(k > 0.0)) return 0;
  // Every edge is split at a golden-ratio point, so that eigenfunctions
  // vanishing at vertices (symmetric graphs) do not sit on a pole of the form.
  constexpr double r = 0.38196601125010515;  // (3 - sqrt 5) / 2
  std::vector<int> index(g.vertex_count(), -1);
  int n = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!g.is_dirichlet(v)) index[v] = n++;
  const int mid0 = n;
  n += static_cast<int>(g.edge_count());

  // Eigenvalues of the pieces with both ends clamped, strictly below k^2.
  std::size_t count = 0;
  auto clamped = [&](double len) {
    const double q = k * len / kPi;
    double m = std::floor(q);
    if (m == q && m > 0.0) m -= 1.0;
    count += static_cast<std::size_t>(m);
  };
  // Negative inertia of the vertex form (Dirichlet-to-Neumann matrix).
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
  auto piece = [&](int iu, int iv, double len) {
    clamped(len);
    const double x = k * len;
    const double s = std::sin(x);
    const double c = std::cos(x);
    if (iu >= 0) q(iu, iu) += k * c / s;
    if (iv >= 0) q(iv, iv) += k * c / s;
    if (iu >= 0 && iv >= 0) {
      q(iu, iv) -= k / s;
      q(iv, iu) -= k / s;
    }
  };
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    const int m = mid0 + static_cast<int>(e);
    piece(index[edge.u], m, r * edge.length);
    piece(m, index[edge.v], (1.0 - r) * edge.length);
  }
  // Congruence scaling keeps the inertia and balances the entries.
  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) {
    const double m = q.row(i).cwiseAbs().maxCoeff();
    d(i) = (m > 0.0 && std::isfinite(m)) ? 1.0 / std::sqrt(m) : 1.0;
  }
  q = d.asDiagonal() * q * d.asDiagonal();
  if (!q.allFinite()) return eigenvalue_count(g, std::nextafter(k, 0.0));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q, Eigen::EigenvaluesOnly);
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) < 0.0) ++count;
  return count;
}

Spectrum eigenvalues(const MetricGraph& g, std::size_t count, const SolverOptions& opts) {
  if (count == 0) throw std::invalid_argument("eigenvalue count must be at least 1");
  Counter counter(g);
  SolverDiagnostics diag;
  std::vector<double> ks;
  if (opts.locator == RootLocator::Inertia) {
    diag.locator = "inertia";
    ks = locate_inertia(g, count, opts, counter, diag);
  } else {
    diag.locator = "singular-scan";
    ks = locate_scan(g, count, opts, counter, diag);
    if (ks.size() < count) throw SpectralError("singular-value scan found fewer eigenvalues than requested");
    // dual-route count check
    for (std::size_t i = 0; i < count; ++i) {
      if (ks[i] == 0.0) continue;
      const double delta = 1e-8 * (1.0 + ks[i]);
      const std::size_t below = counter(ks[i] - delta);
      const std::size_t above = counter(ks[i] + delta);
      if (!(below <= i && i < above))
        diag.warnings.push_back("scan and counting function disagree near k = " + std::to_string(ks[i]));
    }
  }
  Spectrum sp = assemble_spectrum(ks, count, opts.tol_k, opts.locator == RootLocator::Inertia ? &counter : nullptr);
  diag.count_evaluations = counter.evaluations;
  if (opts.locator == RootLocator::Inertia) {
    for (const SpectrumLevel& l : sp.levels)
      if (l.lambda > 0.0) {
        ++diag.svd_evaluations;
        diag.max_secular_value = std::max(diag.max_secular_value, secular_value(g, std::sqrt(l.lambda)));
      }
    if (diag.max_secular_value > opts.accept_threshold)
      diag.warnings.push_back("secular matrix not singular at a located root");
  }
  sp.diagnostics = std::move(diag);
  if (opts.fem_cross_check) fem_cross_check(g, sp, opts);
  return sp;
}

std::vector<Eigenpair> eigenfunctions(const MetricGraph& g, double lambda, const SolverOptions& opts) {
  if (lambda < -kZeroLambda) throw SpectralError("negative eigenvalue requested");
  const double L = total_length(g);
  if (lambda <= kZeroLambda * (1.0 + 1.0 / (L * L))) {
    if (g.has_dirichlet()) throw SpectralError("0 is not an eigenvalue with Dirichlet vertices");
    Eigenpair ep;
    ep.lambda = 0.0;
    ep.k = 0.0;
    ep.multiplicity = 1;
    ep.normalized = true;
    for (std::size_t e = 0; e < g.edge_count(); ++e) ep.waves.push_back({e, 1.0 / std::sqrt(L), 0.0});
    return {ep};
  }

  Counter counter(g);
  const double k_in = std::sqrt(lambda);
  const double delta = 1e-7 * (1.0 + k_in);
  const std::size_t below = counter(std::max(k_in - delta, 0.0));
  const std::size_t above = counter(k_in + delta);
  if (above == below) throw SpectralError("value is not an eigenvalue");
  const double k = counter.locate(below + 1, opts.tol_k);
  const double sep = std::max(1e-9 * (1.0 + k), 100.0 * opts.tol_k * (1.0 + k));
  const int mult = static_cast<int>(counter(k + sep) - counter(k - sep));
  if (mult < 1) throw SpectralError("value is not an eigenvalue");

  const Eigen::MatrixXd a = scaled_secular_matrix(g, k);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const Eigen::Index n = s.size();
  if (s(n - mult) > opts.accept_threshold) throw SpectralError("secular matrix is not singular at the eigenvalue");
  Eigen::MatrixXd basis = svd.matrixV().rightCols(mult);

  // L2-orthonormalize: basis <- basis * R^{-T} with G = R R^T.
  const Eigen::MatrixXd w = coefficient_gram(g, k);
  const Eigen::MatrixXd gram = basis.transpose() * w * basis;
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success) throw SpectralError("eigenspace basis is degenerate");
  const Eigen::MatrixXd lower = llt.matrixL();
  basis = lower.triangularView<Eigen::Lower>().solve(basis.transpose()).transpose();

  std::vector<Eigenpair> out;
  for (int j = 0; j < mult; ++j) {
    Eigenpair ep;
    ep.lambda = k * k;
    ep.k = k;
    ep.multiplicity = mult;
    ep.normalized = true;
    for (std::size_t e = 0; e < g.edge_count(); ++e) ep.waves.push_back({e, basis(2 * e, j), basis(2 * e + 1, j)});
    normalize_sign(ep.waves);
    out.push_back(std::move(ep));
  }
  return out;
}

std::vector<Eigenpair> eigenfunctions_at(const MetricGraph& g, std::size_t index, const SolverOptions& opts) {
  const Spectrum sp = eigenvalues(g, index, opts);
  return eigenfunctions(g, sp.values.back(), opts);
}

double vertex_residual(const MetricGraph& g, const WaveFunction& f) {
  double worst = 0.0;
  double scale = 0.0;
  for (const EdgeWave& w : f.waves) scale = std::max(scale, std::hypot(w.a, w.b));
  if (scale == 0.0) scale = 1.0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& ends = g.incident(v);
    auto at = [&](EdgeEnd end) { return end.side == 0 ? 0.0 : g.edge(end.edge).length; };
    const double v0 = f.value(ends.front().edge, at(ends.front()));
    if (g.is_dirichlet(v)) {
      for (EdgeEnd end : ends) worst = std::max(worst, std::abs(f.value(end.edge, at(end))));
      continue;
    }
    double flux = 0.0;
    for (EdgeEnd end : ends) {
      worst = std::max(worst, std::abs(f.value(end.edge, at(end)) - v0));
      const double d = f.derivative(end.edge, at(end));
      flux += end.side == 0 ? d : -d;
    }
    worst = std::max(worst, std::abs(flux) / (1.0 + f.k));
  }
  return worst / scale;
}

double inner_product(const MetricGraph& g, const WaveFunction& f, const WaveFunction& h) {
  double sum = 0.0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const EdgeWave& x = f.waves.at(e);
    const EdgeWave& y = h.waves.at(e);
    const double len = g.edge(e).length;
    const double bx = f.k == 0.0 ? 0.0 : x.b;
    const double by = h.k == 0.0 ? 0.0 : y.b;
    sum += wave_product(f.k, x.a, bx, h.k, y.a, by, len);
  }
  return sum;
}

double l2_norm(const MetricGraph& g, const WaveFunction& f) { return std::sqrt(inner_product(g, f, f)); }

double dirichlet_energy(const MetricGraph& g, const WaveFunction& f) {
  if (f.k == 0.0) return 0.0;
  // u' = (k b) cos kx + (-k a) sin kx
  WaveFunction d{f.k, {}};
  for (const EdgeWave& w : f.waves) d.waves.push_back({w.edge, f.k * w.b, -f.k * w.a});
  return inner_product(g, d, d);
}

double rayleigh_quotient(const MetricGraph& g, const WaveFunction& f) {
  if (f.waves.size() != g.edge_count()) throw InadmissibleFunction("one wave per edge required");
  double scale = 0.0;
  for (const EdgeWave& w : f.waves) scale = std::max({scale, std::abs(w.a), std::abs(w.b)});
  const double denom = inner_product(g, f, f);
  if (scale == 0.0 || !(denom > 0.0)) throw InadmissibleFunction("function is identically zero");
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& ends = g.incident(v);
    auto at = [&](EdgeEnd end) { return f.value(end.edge, end.side == 0 ? 0.0 : g.edge(end.edge).length); };
    const double v0 = at(ends.front());
    for (EdgeEnd end : ends) {
      if (std::abs(at(end) - v0) > 1e-8 * scale) throw InadmissibleFunction("function is discontinuous at a vertex");
      if (g.is_dirichlet(v) && std::abs(at(end)) > 1e-8 * scale)
        throw InadmissibleFunction("function does not vanish at a Dirichlet vertex");
    }
  }
  return dirichlet_energy(g, f) / denom;
}

double rayleigh_quotient(const MetricGraph& g, const PiecewiseLinear& f) {
  if (f.nodes.size() != g.edge_count()) throw InadmissibleFunction("one node list per edge required");
  double scale = 0.0;
  for (const auto& n : f.nodes) {
    if (n.size() < 2) throw InadmissibleFunction("each edge needs at least two nodal values");
    for (double x : n) scale = std::max(scale, std::abs(x));
  }
  if (scale == 0.0) throw InadmissibleFunction("function is identically zero");
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& ends = g.incident(v);
    auto at = [&](EdgeEnd end) { return end.side == 0 ? f.nodes[end.edge].front() : f.nodes[end.edge].back(); };
    const double v0 = at(ends.front());
    for (EdgeEnd end : ends) {
      if (std::abs(at(end) - v0) > 1e-12 * scale) throw InadmissibleFunction("function is discontinuous at a vertex");
      if (g.is_dirichlet(v) && std::abs(at(end)) > 1e-12 * scale)
        throw InadmissibleFunction("function does not vanish at a Dirichlet vertex");
    }
  }
  double num = 0.0;
  double den = 0.0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& n = f.nodes[e];
    const double h = g.edge(e).length / static_cast<double>(n.size() - 1);
    for (std::size_t i = 0; i + 1 < n.size(); ++i) {
      const double d = n[i + 1] - n[i];
      num += d * d / h;
      den += h * (n[i] * n[i] + n[i] * n[i + 1] + n[i + 1] * n[i + 1]) / 3.0;
    }
  }
  return num / den;
}

double pruefer_amplitude(const Eigenpair& ep, std::size_t edge) {
  if (!(ep.lambda > 0.0)) throw SpectralError("Pruefer amplitude needs a positive eigenvalue");
  if (!ep.normalized) throw SpectralError("Pruefer amplitude needs a normalized eigenfunction");
  const EdgeWave& w = ep.waves.at(edge);
  return ep.k * ep.k * (w.a * w.a + w.b * w.b);
}

std::vector<double> hadamard_derivatives(const MetricGraph& g, double lambda, const SolverOptions& opts) {
  const auto eps = eigenfunctions(g, lambda, opts);
  if (eps.size() != 1) throw SpectralError("eigenvalue is not simple");
  std::vector<double> out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) out.push_back(-pruefer_amplitude(eps.front(), e));
  return out;
}

double hadamard_derivative(const MetricGraph& g, double lambda, std::size_t edge, const SolverOptions& opts) {
  if (edge >= g.edge_count()) throw std::out_of_range("edge index out of range");
  return hadamard_derivatives(g, lambda, opts).at(edge);
}

namespace {

// Extremes of a cos(kx) + b sin(kx) over [0, len] via endpoints and critical points.
std::pair<double, double> wave_range(double k, const EdgeWave& w, double len) {
  auto val = [&](double x) { return k == 0.0 ? w.a : w.a * std::cos(k * x) + w.b * std::sin(k * x); };
  double lo = std::min(val(0.0), val(len));
  double hi = std::max(val(0.0), val(len));
  if (k > 0.0) {
    const double phi = std::atan2(w.b, w.a);
    const double r = std::hypot(w.a, w.b);
    // maxima at kx = phi + 2m pi, minima at kx = phi + (2m+1) pi
    const double first = phi / k;
    const double period = kPi / k;
    const double start = std::ceil((0.0 - first) / period);
    for (double m = start; first + m * period <= len; m += 1.0) {
      const double x = first + m * period;
      if (x < 0.0) continue;
      if (static_cast<long long>(std::llround(m)) % 2 == 0) hi = std::max(hi, r);
      else lo = std::min(lo, -r);
    }
  }
  return {lo, hi};
}

}  // namespace

double max_abs_on_edge(const MetricGraph& g, const WaveFunction& f, std::size_t edge) {
  auto [lo, hi] = wave_range(f.k, f.waves.at(edge), g.edge(edge).length);
  return std::max(std::abs(lo), std::abs(hi));
}

double max_on_edge(const MetricGraph& g, const WaveFunction& f, std::size_t edge) {
  return wave_range(f.k, f.waves.at(edge), g.edge(edge).length).second;
}

}  // namespace qglab

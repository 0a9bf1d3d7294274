#include "qturan/motzkin_straus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qturan/errors.hpp"

namespace qturan {

std::vector<int> SimplexPoint::support() const {
  std::vector<int> s;
  for (std::size_t v = 0; v < x.size(); ++v)
    if (x[v] > 0.0) s.push_back(static_cast<int>(v));
  return s;
}

bool SimplexPoint::on_simplex(double tol) const {
  double total = 0.0;
  for (double v : x) {
    if (!(v >= 0.0)) return false;
    total += v;
  }
  return std::abs(total - 1.0) <= tol;
}

SimplexPoint uniform_point(int n) { return SimplexPoint{std::vector<double>(n, 1.0 / n)}; }

SimplexPoint biased_point(int n, int vertex, double bias) {
  if (n == 1) return SimplexPoint{{1.0}};
  SimplexPoint p{std::vector<double>(n, (1.0 - bias) / (n - 1))};
  p.x[vertex] = bias;
  return p;
}

SimplexPoint sample_simplex(int n, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  SimplexPoint p{std::vector<double>(n)};
  double total = 0.0;
  for (double& v : p.x) total += (v = expo(rng));
  for (double& v : p.x) v /= total;
  return p;
}

namespace {

void renormalize(std::vector<double>& x) {
  const double total = std::accumulate(x.begin(), x.end(), 0.0);
  for (double& v : x) v /= total;
}

}  // namespace

ReplicatorRun replicator_dynamics(const SymMatrix& m, SimplexPoint start, int max_iters, double tol,
                                  const std::function<void(double)>& on_step) {
  const int n = m.order();
  if (start.x.size() != static_cast<std::size_t>(n)) throw ArgumentError("start point has the wrong dimension");
  if (!m.nonnegative()) throw DomainError("replicator dynamics need an entrywise nonnegative matrix");
  ReplicatorRun run;
  run.point = std::move(start);
  std::vector<double>& x = run.point.x;
  renormalize(x);
  auto mx = m.multiply(x);
  double value = std::inner_product(x.begin(), x.end(), mx.begin(), 0.0);
  for (; run.iterations < max_iters && value > 0.0; ++run.iterations) {
    double delta = 0.0;
    for (int v = 0; v < n; ++v) {
      const double next = x[v] * mx[v] / value;
      delta = std::max(delta, std::abs(next - x[v]));
      x[v] = next;
    }
    renormalize(x);
    mx = m.multiply(x);
    value = std::inner_product(x.begin(), x.end(), mx.begin(), 0.0);
    if (std::isnan(value)) throw NumericalError("replicator dynamics produced NaN");
    if (on_step) on_step(value);
    if (delta < tol) {
      ++run.iterations;
      break;
    }
  }
  run.value = value;
  return run;
}

QpResult simplex_qp_max(const SymMatrix& m, const ReplicatorOptions& options) {
  if (options.restarts < 1) throw ArgumentError("restarts must be >= 1");
  const int n = m.order();
  QpResult best;
  if (n == 0) return best;
  std::mt19937_64 rng(options.seed);
  for (int r = 0; r < options.restarts; ++r) {
    SimplexPoint start;
    if (r == 0)
      start = uniform_point(n);
    else if (r <= n)
      start = biased_point(n, r - 1);
    else
      start = sample_simplex(n, rng);
    auto run = replicator_dynamics(m, std::move(start), options.max_iters, options.tol);
    if (r == 0 || run.value > best.value) {
      best.value = run.value;
      best.point = std::move(run.point);
      best.best_restart = r;
    }
  }
  return best;
}

CliqueEstimate ms_clique_estimate(const Graph& g) {
  if (g.size() == 0) throw DomainError("clique estimate needs at least one edge");
  ReplicatorOptions opt;
  opt.restarts = g.order() + 1;
  const auto res = simplex_qp_max(adjacency_matrix(g), opt);
  CliqueEstimate est;
  est.value = res.value;
  est.omega = static_cast<int>(std::lround(1.0 / (1.0 - res.value)));
  est.certified = est.omega == max_clique(g).omega;
  return est;
}

SymMatrix ms_weight_matrix(const Graph& g, const CliqueProfile& profile) {
  SymMatrix w(g.order());
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const double c = profile.per_edge[i];
    w.set(edges[i].u, edges[i].v, c / (c - 1.0));
  }
  return w;
}

WeightedMsCheck verify_weighted_ms(const Graph& g, const SimplexPoint& x) {
  const auto profile = clique_profile(g);
  return verify_weighted_ms(g, profile, ms_weight_matrix(g, profile), x);
}

WeightedMsCheck verify_weighted_ms(const Graph& g, const CliqueProfile& profile, const SymMatrix& weights,
                                   const SimplexPoint& x) {
  if (x.x.size() != static_cast<std::size_t>(g.order()) || !x.on_simplex())
    throw DomainError("point is not on the standard simplex");
  WeightedMsCheck out;
  out.value = weights.quadratic_form(x.x);
  out.holds = out.value <= 1.0 + 1e-8;

  // Non-adjacency on the support must be an equivalence relation with
  // exactly omega classes of mass 1/omega each.
  const auto support = x.support();
  std::vector<int> cls(g.order(), -1);
  std::vector<double> mass;
  bool multipartite = true;
  for (int v : support) {
    if (cls[v] >= 0) continue;
    cls[v] = static_cast<int>(mass.size());
    mass.push_back(0.0);
    for (int u : support)
      if (u != v && !g.adjacent(u, v)) cls[u] = cls[v];
  }
  for (int v : support) mass[cls[v]] += x.x[v];
  for (std::size_t a = 0; a < support.size() && multipartite; ++a)
    for (std::size_t b = a + 1; b < support.size(); ++b) {
      const int u = support[a], v = support[b];
      if ((cls[u] == cls[v]) == g.adjacent(u, v)) {
        multipartite = false;
        break;
      }
    }
  if (multipartite && static_cast<int>(mass.size()) == profile.omega) {
    out.equality_structure = std::all_of(mass.begin(), mass.end(), [&](double mk) {
      return std::abs(mk - 1.0 / profile.omega) <= kClassMassTolerance;
    });
  }
  return out;
}

}  // namespace qturan

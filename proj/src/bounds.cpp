#include "qturan/bounds.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "qturan/errors.hpp"

namespace qturan {

namespace {

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw DomainError("graph is not connected");
}

double localized_sum(std::span<const int> c) {
  double total = 0.0;
  for (int cv : c) total += 1.0 - 1.0 / cv;
  return total;
}

BoundRecord linear_record(std::string_view name, double value, double measured, double eq_tol, bool asserted = true) {
  BoundRecord r;
  r.name = std::string(name);
  r.value = value;
  r.measured = measured;
  r.slack = value - measured;
  r.equality = std::abs(r.slack) < eq_tol;
  r.asserted = asserted;
  return r;
}

// rhs_squared bounds measured^2.
BoundRecord squared_record(std::string_view name, double rhs_squared, double measured, double eq_tol) {
  BoundRecord r;
  r.name = std::string(name);
  r.value = std::sqrt(std::max(0.0, rhs_squared));
  r.measured = measured;
  r.slack = rhs_squared - measured * measured;
  r.equality = std::abs(r.slack) < eq_tol;
  r.squared = true;
  return r;
}

BoundRecord skipped_record(std::string_view name, double measured) {
  BoundRecord r;
  r.name = std::string(name);
  r.measured = measured;
  r.squared = true;
  r.skipped = true;
  return r;
}

}  // namespace

std::string a_alpha_bound_name(double alpha) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, alpha);
  return std::string(bound_names::kAAlphaPrefix) + std::string(buf, ptr);
}

bool Classification::regular_multipartite() const {
  return !parts.empty() && std::all_of(parts.begin(), parts.end(), [&](int p) { return p == parts.front(); });
}

std::string Classification::label() const {
  switch (kind) {
    case Kind::CompleteBipartite:
      return "CompleteBipartite";
    case Kind::RegularCompleteMultipartite:
      return "RegularCompleteMultipartite(" + std::to_string(parts.size()) + ")";
    case Kind::CompleteMultipartiteIrregular:
      return "CompleteMultipartiteIrregular";
    case Kind::Other:
      break;
  }
  return "Other";
}

Classification classify_equality(const Graph& g) {
  Classification c;
  const int n = g.order();
  if (n <= 1) return c;
  std::vector<int> cls(n, -1);
  std::vector<int> parts;
  for (int v = 0; v < n; ++v) {
    if (cls[v] >= 0) continue;
    cls[v] = static_cast<int>(parts.size());
    parts.push_back(1);
    for (int u = v + 1; u < n; ++u)
      if (!g.adjacent(u, v)) {
        if (cls[u] >= 0) return c;
        cls[u] = cls[v];
        ++parts.back();
      }
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((cls[u] == cls[v]) == g.adjacent(u, v)) return c;
  if (parts.size() < 2) return c;
  c.parts = std::move(parts);
  if (c.complete_bipartite())
    c.kind = Classification::Kind::CompleteBipartite;
  else if (c.regular_multipartite())
    c.kind = Classification::Kind::RegularCompleteMultipartite;
  else
    c.kind = Classification::Kind::CompleteMultipartiteIrregular;
  return c;
}

bool expected_vertex_q_equality(const Classification& c) {
  return c.complete_bipartite() || (c.regular_multipartite() && c.parts.size() >= 3);
}

bool expected_vertex_lambda_equality(const Classification& c) { return c.regular_multipartite(); }

double bound_abreu_nikiforov(const Graph& g, const CliqueProfile& p) {
  if (g.order() <= 1) return 0.0;
  return 2.0 * g.order() * (1.0 - 1.0 / p.omega);
}

double bound_vertex_localized_q(const Graph& g, const CliqueProfile& p) {
  if (g.order() <= 1) return 0.0;
  return 2.0 * localized_sum(p.per_vertex);
}

double bound_vertex_localized_lambda(const Graph& g, const CliqueProfile& p) {
  if (g.order() <= 1) return 0.0;
  return localized_sum(p.per_vertex);
}

double edge_localized_lambda_squared(const Graph& /*g*/, const CliqueProfile& p) {
  return 2.0 * localized_sum(p.per_edge);
}

double conjecture_rhs(const Graph& g, std::span<const int> per_edge) {
  double total = 0.0;
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    total += (1.0 - 1.0 / per_edge[i]) * (1.0 / g.degree(edges[i].u) + 1.0 / g.degree(edges[i].v));
  return 2.0 * total;
}

double bound_abreu_nikiforov(const Graph& g) {
  require_connected(g);
  return bound_abreu_nikiforov(g, clique_profile(g));
}

double bound_vertex_localized_q(const Graph& g) {
  require_connected(g);
  return bound_vertex_localized_q(g, clique_profile(g));
}

double bound_vertex_localized_lambda(const Graph& g) {
  require_connected(g);
  return bound_vertex_localized_lambda(g, clique_profile(g));
}

double bound_edge_localized_lambda(const Graph& g) {
  require_connected(g);
  return std::sqrt(edge_localized_lambda_squared(g, clique_profile(g)));
}

double bound_a_alpha(const Graph& g, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 0.5)) throw DomainError("A_alpha bound holds for 0 <= alpha <= 1/2");
  return bound_vertex_localized_lambda(g);
}

double conjecture_rhs(const Graph& g) {
  require_connected(g);
  return conjecture_rhs(g, clique_profile(g).per_edge);
}

double bound_weighted_signed(const WeightedSignedGraph& ws, const BalancedCliqueProfile& p) {
  double total = 0.0;
  for (int v = 0; v < ws.order(); ++v) total += (1.0 - 1.0 / p.per_vertex[v]) * ws.weight(v);
  return 2.0 * total;
}

double bound_weighted_signed(const WeightedSignedGraph& ws) {
  require_connected(ws.underlying());
  return bound_weighted_signed(ws, balanced_clique_profile(ws.signed_graph()));
}

const BoundRecord* BoundReport::find(std::string_view name) const {
  for (const auto& b : bounds)
    if (b.name == name) return &b;
  return nullptr;
}

SignedGraph switch_to_nonnegative_eigenvector(const SignedGraph& s, std::span<const double> eigenvector) {
  std::vector<int> eta(eigenvector.size());
  for (std::size_t v = 0; v < eigenvector.size(); ++v) eta[v] = eigenvector[v] < 0.0 ? -1 : 1;
  return switch_by(s, eta);
}

BoundReport full_report(const Graph& g, const ReportOptions& options) {
  for (double a : options.alphas)
    if (!(a >= 0.0 && a <= 0.5)) throw DomainError("A_alpha bound holds for 0 <= alpha <= 1/2");
  require_connected(g);
  const double tol = options.equality_tol;
  BoundReport r;
  r.n = g.order();
  r.m = g.size();

  auto add_all = [&](auto value_of) {
    r.bounds.push_back(value_of(bound_names::kEdgeLambda, true));
    r.bounds.push_back(value_of(bound_names::kVertexLambda, false));
    r.bounds.push_back(value_of(bound_names::kCliqueQ, false));
    r.bounds.push_back(value_of(bound_names::kVertexQ, false));
    for (double a : options.alphas) r.bounds.push_back(value_of(a_alpha_bound_name(a), false));
    r.bounds.push_back(value_of(bound_names::kQLower, false));
    r.bounds.push_back(value_of(bound_names::kQUpper, false));
  };

  if (g.order() <= 1) {
    r.degenerate = true;
    r.omega = g.order();
    r.per_vertex.assign(g.order(), 1);
    add_all([&](std::string_view name, bool squared) {
      BoundRecord b = linear_record(name, 0.0, 0.0, tol);
      b.squared = squared;
      return b;
    });
    r.bounds.push_back(linear_record(bound_names::kEdgeQConjecture, 0.0, 0.0, tol, false));
    return r;
  }

  const CliqueProfile profile = clique_profile(g);
  r.omega = profile.omega;
  r.per_vertex = profile.per_vertex;
  r.per_edge = profile.per_edge;
  r.classification = classify_equality(g);

  const auto qs = q_index(g, options.eigen_tol);
  const auto ls = lambda1(g, options.eigen_tol);
  r.q = qs.lambda_max;
  r.lambda1 = ls.lambda_max;

  const double vertex_lambda = bound_vertex_localized_lambda(g, profile);
  r.bounds.push_back(squared_record(bound_names::kEdgeLambda, edge_localized_lambda_squared(g, profile), r.lambda1, tol));
  r.bounds.push_back(linear_record(bound_names::kVertexLambda, vertex_lambda, r.lambda1, tol));
  r.bounds.push_back(linear_record(bound_names::kCliqueQ, bound_abreu_nikiforov(g, profile), r.q, tol));
  r.bounds.push_back(linear_record(bound_names::kVertexQ, bound_vertex_localized_q(g, profile), r.q, tol));
  for (double a : options.alphas) {
    const double la = lambda1_a_alpha(g, a, options.eigen_tol).lambda_max;
    r.bounds.push_back(linear_record(a_alpha_bound_name(a), vertex_lambda, la, tol));
  }
  r.bounds.push_back(linear_record(bound_names::kQLower, r.q, 2.0 * r.lambda1, tol));
  r.bounds.push_back(linear_record(bound_names::kQUpper, 2.0 * g.max_degree(), r.q, tol));
  r.bounds.push_back(linear_record(bound_names::kEdgeQConjecture, conjecture_rhs(g, profile.per_edge), r.q, tol, false));

  const auto x = perron_simplex_vector(qs);
  if (std::all_of(x.begin(), x.end(), [](double v) { return v > 0.0; })) {
    const double half = leading_eigenpair(half_q_matrix(g, x), options.eigen_tol).lambda_max;
    r.half_q_gap = std::abs(half - r.q / 2.0);
  }
  return r;
}

BoundReport full_report(const WeightedSignedGraph& ws, const ReportOptions& options) {
  const Graph& g = ws.underlying();
  const SignedGraph& s = ws.signed_graph();
  require_connected(g);
  const double tol = options.equality_tol;
  BoundReport r;
  r.is_signed = true;
  r.n = g.order();
  r.m = g.size();

  const std::string_view signed_names[] = {bound_names::kSignedClique, bound_names::kSignedEdge,
                                           bound_names::kSignedFrustration, bound_names::kSignedLocalPositive,
                                           bound_names::kSignedLocalAll, bound_names::kWeightedSignedQ};
  if (g.order() <= 1) {
    r.degenerate = true;
    r.omega = g.order();
    r.omega_b = g.order();
    r.frustration = 0;
    r.per_vertex.assign(g.order(), 1);
    for (auto name : signed_names) {
      BoundRecord b = linear_record(name, 0.0, 0.0, tol);
      b.squared = name != bound_names::kSignedClique && name != bound_names::kWeightedSignedQ;
      r.bounds.push_back(b);
    }
    if (ws.unit_weights()) r.bounds.push_back(linear_record(bound_names::kSignedEdgeQConjecture, 0.0, 0.0, tol, false));
    return r;
  }

  const auto plain = clique_profile(g);
  const auto bal = balanced_clique_profile(s);
  r.omega = plain.omega;
  r.omega_b = bal.omega_b;
  r.per_vertex = bal.per_vertex;
  r.per_edge = bal.per_edge;
  r.classification = classify_equality(g);

  const auto as = lambda1_signed_adjacency(s, options.eigen_tol);
  const auto qs = q_signed(ws, options.eigen_tol);
  r.lambda1 = as.lambda_max;
  r.q = qs.lambda_max;

  const double n = g.order(), m = static_cast<double>(g.size());
  const double ob = 1.0 - 1.0 / bal.omega_b;
  r.bounds.push_back(linear_record(bound_names::kSignedClique, n * ob, r.lambda1, tol));
  r.bounds.push_back(squared_record(bound_names::kSignedEdge, 2.0 * m * ob, r.lambda1, tol));
  if (g.order() <= kMaxFrustrationOrder) {
    r.frustration = frustration_index(s);
    r.bounds.push_back(squared_record(bound_names::kSignedFrustration, 2.0 * (m - *r.frustration) * ob, r.lambda1, tol));
  } else {
    r.bounds.push_back(skipped_record(bound_names::kSignedFrustration, r.lambda1));
  }

  // c_b is switching invariant, so it is read off Gamma.
  const SignedGraph switched = switch_to_nonnegative_eigenvector(s, as.eigenvector);
  double positive = 0.0, all = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double term = 1.0 - 1.0 / bal.per_edge[i];
    all += term;
    if (switched.sign_of_edge(i) > 0) positive += term;
  }
  r.bounds.push_back(squared_record(bound_names::kSignedLocalPositive, 2.0 * positive, r.lambda1, tol));
  r.bounds.push_back(squared_record(bound_names::kSignedLocalAll, 2.0 * all, r.lambda1, tol));
  r.bounds.push_back(linear_record(bound_names::kWeightedSignedQ, bound_weighted_signed(ws, bal), r.q, tol));
  if (ws.unit_weights())
    r.bounds.push_back(linear_record(bound_names::kSignedEdgeQConjecture, conjecture_rhs(g, bal.per_edge), r.q, tol, false));
  return r;
}

}  // namespace qturan

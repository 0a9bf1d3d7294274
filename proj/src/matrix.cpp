#include "qturan/matrix.hpp"

#include <cmath>

#include "qturan/errors.hpp"

namespace qturan {

std::vector<double> SymMatrix::multiply(std::span<const double> x) const {
  if (x.size() != static_cast<std::size_t>(n_)) throw ArgumentError("vector length does not match matrix order");
  std::vector<double> y(n_, 0.0);
  for (int i = 0; i < n_; ++i) {
    const double* row = &data_[static_cast<std::size_t>(i) * n_];
    double acc = 0.0;
    for (int j = 0; j < n_; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
  return y;
}

double SymMatrix::quadratic_form(std::span<const double> x) const {
  const auto y = multiply(x);
  double acc = 0.0;
  for (int i = 0; i < n_; ++i) acc += x[i] * y[i];
  return acc;
}

double SymMatrix::frobenius_norm() const {
  double acc = 0.0;
  for (double v : data_) acc += v * v;
  return std::sqrt(acc);
}

bool SymMatrix::nonnegative() const {
  for (double v : data_)
    if (v < 0.0) return false;
  return true;
}

SymMatrix& SymMatrix::scale(double factor) {
  for (double& v : data_) v *= factor;
  return *this;
}

SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix m(g.order());
  for (const Edge& e : g.edges()) m.set(e.u, e.v, 1.0);
  return m;
}

SymMatrix degree_matrix(const Graph& g) {
  SymMatrix m(g.order());
  for (int v = 0; v < g.order(); ++v) m.set(v, v, g.degree(v));
  return m;
}

SymMatrix laplacian_matrix(const Graph& g) {
  SymMatrix m = degree_matrix(g);
  for (const Edge& e : g.edges()) m.set(e.u, e.v, -1.0);
  return m;
}

SymMatrix signless_laplacian_matrix(const Graph& g) {
  SymMatrix m = degree_matrix(g);
  for (const Edge& e : g.edges()) m.set(e.u, e.v, 1.0);
  return m;
}

SymMatrix a_alpha_matrix(const Graph& g, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ArgumentError("alpha must lie in [0, 1]");
  SymMatrix m(g.order());
  for (int v = 0; v < g.order(); ++v) m.set(v, v, alpha * g.degree(v));
  for (const Edge& e : g.edges()) m.set(e.u, e.v, 1.0 - alpha);
  return m;
}

SymMatrix signed_adjacency_matrix(const SignedGraph& s) {
  SymMatrix m(s.order());
  auto edges = s.underlying().edges();
  for (std::size_t i = 0; i < edges.size(); ++i) m.set(edges[i].u, edges[i].v, s.sign_of_edge(i));
  return m;
}

namespace {

SymMatrix weighted_signed(const WeightedSignedGraph& ws, double off_diagonal_sign) {
  const Graph& g = ws.underlying();
  SymMatrix m(g.order());
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int u = edges[i].u, v = edges[i].v;
    m.add_diagonal(u, ws.weight(v));
    m.add_diagonal(v, ws.weight(u));
    const double w = std::sqrt(ws.weight(u) * ws.weight(v));
    m.set(u, v, off_diagonal_sign * ws.signed_graph().sign_of_edge(i) * w);
  }
  return m;
}

}  // namespace

SymMatrix signed_signless_laplacian_matrix(const WeightedSignedGraph& ws) { return weighted_signed(ws, 1.0); }
SymMatrix signed_laplacian_matrix(const WeightedSignedGraph& ws) { return weighted_signed(ws, -1.0); }

SymMatrix build_matrix(const Graph& g, MatrixKind kind, double alpha) {
  switch (kind) {
    case MatrixKind::Adjacency:
      return adjacency_matrix(g);
    case MatrixKind::Laplacian:
      return laplacian_matrix(g);
    case MatrixKind::SignlessLaplacian:
      return signless_laplacian_matrix(g);
    case MatrixKind::AAlpha:
      return a_alpha_matrix(g, alpha);
    default:
      return build_matrix(WeightedSignedGraph(SignedGraph(g)), kind);
  }
}

SymMatrix build_matrix(const WeightedSignedGraph& ws, MatrixKind kind) {
  switch (kind) {
    case MatrixKind::SignedAdjacency:
      return signed_adjacency_matrix(ws.signed_graph());
    case MatrixKind::SignedLaplacian:
      return signed_laplacian_matrix(ws);
    case MatrixKind::SignedSignlessLaplacian:
      return signed_signless_laplacian_matrix(ws);
    default:
      throw ArgumentError("matrix kind requires an unsigned graph");
  }
}

}  // namespace qturan

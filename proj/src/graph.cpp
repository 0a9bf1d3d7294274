#include "qturan/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qturan/errors.hpp"

namespace qturan {

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw ArgumentError("vertex count must be nonnegative");
  adj_.assign(n, VertexSet(n));
  degree_.assign(n, 0);
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw ArgumentError("edge endpoint out of range: " + std::to_string(e.u) + "-" + std::to_string(e.v));
    if (e.u == e.v) throw ArgumentError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (adj_[e.u].test(e.v))
      throw ArgumentError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    adj_[e.u].set(e.v);
    adj_[e.v].set(e.u);
    ++degree_[e.u];
    ++degree_[e.v];
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
}

int Graph::max_degree() const noexcept {
  return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

std::optional<std::size_t> Graph::edge_index(int u, int v) const noexcept {
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= n_ || !adj_[u].test(v)) return std::nullopt;
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  return static_cast<std::size_t>(it - edges_.begin());
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  VertexSet seen(n);
  std::vector<int> stack{0};
  seen.set(0);
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    g.neighbors(v).for_each([&](int u) {
      if (!seen.test(u)) {
        seen.set(u);
        ++reached;
        stack.push_back(u);
      }
    });
  }
  return reached == n;
}

SignedGraph::SignedGraph(Graph g) : graph_(std::move(g)), signs_(graph_.size(), 1) {}

SignedGraph::SignedGraph(Graph g, std::vector<int> signs) : graph_(std::move(g)), signs_(std::move(signs)) {
  if (signs_.size() != graph_.size())
    throw ArgumentError("sign count " + std::to_string(signs_.size()) + " does not match edge count " +
                        std::to_string(graph_.size()));
  for (int s : signs_)
    if (s != 1 && s != -1) throw ArgumentError("edge sign must be +1 or -1");
}

int SignedGraph::sign(int u, int v) const noexcept {
  auto idx = graph_.edge_index(u, v);
  return idx ? signs_[*idx] : 0;
}

std::size_t SignedGraph::negative_edge_count() const noexcept {
  return static_cast<std::size_t>(std::count(signs_.begin(), signs_.end(), -1));
}

SignedGraph SignedGraph::negated() const {
  std::vector<int> flipped(signs_);
  for (int& s : flipped) s = -s;
  return SignedGraph(graph_, std::move(flipped));
}

SignedGraph switch_by(const SignedGraph& s, std::span<const int> eta) {
  const Graph& g = s.underlying();
  if (eta.size() != static_cast<std::size_t>(g.order()))
    throw ArgumentError("switching function must have one entry per vertex");
  std::vector<int> signs(s.signs().begin(), s.signs().end());
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int a = eta[edges[i].u], b = eta[edges[i].v];
    if ((a != 1 && a != -1) || (b != 1 && b != -1)) throw ArgumentError("switching values must be +1 or -1");
    signs[i] *= a * b;
  }
  return SignedGraph(g, std::move(signs));
}

SignedGraph switch_vertices(const SignedGraph& s, std::span<const int> subset) {
  std::vector<int> eta(s.order(), 1);
  for (int v : subset) {
    if (v < 0 || v >= s.order()) throw ArgumentError("switching vertex out of range: " + std::to_string(v));
    eta[v] = -1;
  }
  return switch_by(s, eta);
}

int cycle_sign(const SignedGraph& s, std::span<const int> cycle) {
  int product = 1;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const int a = cycle[i], b = cycle[(i + 1) % cycle.size()];
    const int sg = (a >= 0 && b >= 0 && a < s.order() && b < s.order()) ? s.sign(a, b) : 0;
    if (sg == 0) throw ArgumentError("cycle uses a non-edge " + std::to_string(a) + "-" + std::to_string(b));
    product *= sg;
  }
  return product;
}

WeightedSignedGraph::WeightedSignedGraph(SignedGraph s)
    : signed_(std::move(s)), weights_(static_cast<std::size_t>(signed_.order()), 1.0) {}

WeightedSignedGraph::WeightedSignedGraph(SignedGraph s, std::vector<double> weights)
    : signed_(std::move(s)), weights_(std::move(weights)) {
  if (weights_.size() != static_cast<std::size_t>(signed_.order()))
    throw ArgumentError("weight count does not match vertex count");
  for (std::size_t v = 0; v < weights_.size(); ++v)
    if (!(weights_[v] > 0.0) || !std::isfinite(weights_[v]))
      throw DomainError("vertex weight must be positive and finite (vertex " + std::to_string(v) + ")");
}

bool WeightedSignedGraph::unit_weights() const noexcept {
  return std::all_of(weights_.begin(), weights_.end(), [](double w) { return w == 1.0; });
}

}  // namespace qturan

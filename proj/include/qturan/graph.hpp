#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qturan/vertex_set.hpp"

namespace qturan {

struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph. Edges are stored as (u < v) pairs sorted
// lexicographically; the object is immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Rejects loops, duplicate edges and out-of-range endpoints. Edges may be
  // given in either orientation and any order.
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  bool adjacent(int u, int v) const noexcept { return adj_[u].test(v); }
  const VertexSet& neighbors(int v) const noexcept { return adj_[v]; }
  int degree(int v) const noexcept { return degree_[v]; }
  int max_degree() const noexcept;

  std::span<const Edge> edges() const noexcept { return edges_; }
  // Position of {u, v} in edges(), if it is an edge.
  std::optional<std::size_t> edge_index(int u, int v) const noexcept;

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<int> degree_;
  std::vector<Edge> edges_;
};

bool is_connected(const Graph& g);

// Graph with a ±1 sign on each edge, aligned with underlying().edges().
class SignedGraph {
 public:
  SignedGraph() = default;
  // All signs +1.
  explicit SignedGraph(Graph g);
  SignedGraph(Graph g, std::vector<int> signs);

  const Graph& underlying() const noexcept { return graph_; }
  int order() const noexcept { return graph_.order(); }
  std::size_t size() const noexcept { return graph_.size(); }
  std::span<const int> signs() const noexcept { return signs_; }
  int sign_of_edge(std::size_t edge) const noexcept { return signs_[edge]; }
  // 0 for non-adjacent pairs.
  int sign(int u, int v) const noexcept;
  std::size_t negative_edge_count() const noexcept;

  SignedGraph negated() const;

  bool operator==(const SignedGraph&) const = default;

 private:
  Graph graph_;
  std::vector<int> signs_;
};

// Negates the sign of every edge with exactly one endpoint in `subset`.
SignedGraph switch_vertices(const SignedGraph& s, std::span<const int> subset);
// Switching by a ±1 function on vertices.
SignedGraph switch_by(const SignedGraph& s, std::span<const int> eta);

// Product of edge signs along a closed walk v0 v1 ... vk-1 v0. Throws if a
// consecutive pair is not an edge.
int cycle_sign(const SignedGraph& s, std::span<const int> cycle);

class WeightedSignedGraph {
 public:
  WeightedSignedGraph() = default;
  // Unit weights.
  WeightedSignedGraph(SignedGraph s);  // NOLINT(google-explicit-constructor)
  WeightedSignedGraph(SignedGraph s, std::vector<double> weights);

  const SignedGraph& signed_graph() const noexcept { return signed_; }
  const Graph& underlying() const noexcept { return signed_.underlying(); }
  int order() const noexcept { return signed_.order(); }
  std::span<const double> weights() const noexcept { return weights_; }
  double weight(int v) const noexcept { return weights_[v]; }
  bool unit_weights() const noexcept;

  bool operator==(const WeightedSignedGraph&) const = default;

 private:
  SignedGraph signed_;
  std::vector<double> weights_;
};

}  // namespace qturan

#include "qturan/generators.hpp"

#include <string>
#include <vector>

#include "qturan/errors.hpp"

namespace qturan {

Graph complete_multipartite(std::span<const int> parts) {
  if (parts.empty()) throw ArgumentError("complete_multipartite needs at least one part");
  std::vector<int> cls;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] <= 0) throw ArgumentError("part sizes must be positive");
    cls.insert(cls.end(), parts[p], static_cast<int>(p));
  }
  const int n = static_cast<int>(cls.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (cls[u] != cls[v]) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw ArgumentError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph(10, edges);
}

Graph paw_graph() {
  const Edge edges[] = {{0, 1}, {0, 2}, {1, 2}, {0, 3}};
  return Graph(4, edges);
}

SignedGraph gamma_n(int n) {
  if (n < 4) throw ArgumentError("gamma_n requires n >= 4, got " + std::to_string(n));
  Graph k = complete_graph(n);
  std::vector<int> signs(k.size(), 1);
  signs[*k.edge_index(0, 1)] = -1;
  return SignedGraph(std::move(k), std::move(signs));
}

std::optional<Graph> random_connected_graph(int n, double p, std::mt19937_64& rng, int max_rejections) {
  if (n < 1) throw ArgumentError("random graph needs n >= 1");
  std::bernoulli_distribution coin(p);
  for (int attempt = 0; attempt < max_rejections; ++attempt) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) edges.push_back({u, v});
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
  return std::nullopt;
}

}  // namespace qturan

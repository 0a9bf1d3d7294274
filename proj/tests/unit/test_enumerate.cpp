#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "../support/oracles.hpp"
#include "qturan/enumerate.hpp"
#include "qturan/errors.hpp"
#include "qturan/generators.hpp"

using namespace qturan;

TEST_CASE("connected graph counts") {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) CHECK(enumerate_connected_graphs(n).size() == expected[n - 1]);
  CHECK_THROWS_AS(enumerate_connected_graphs(8), UnsupportedSizeError);
  CHECK_THROWS_AS(enumerate_connected_graphs(0), UnsupportedSizeError);
}

TEST_CASE("enumeration matches the brute-force isomorphism oracle") {
  for (int n = 1; n <= 6; ++n) {
    const auto classes = oracle::connected_classes(n);
    std::set<std::uint64_t> from_oracle;
    for (const auto& edges : classes) {
      std::vector<Edge> e;
      for (auto [u, v] : edges) e.push_back({u, v});
      from_oracle.insert(canonical_key(Graph(n, e)));
    }
    std::set<std::uint64_t> from_library;
    for (const Graph& g : enumerate_connected_graphs(n)) {
      CHECK(is_connected(g));
      from_library.insert(canonical_key(g));
    }
    CHECK(from_oracle.size() == classes.size());
    CHECK(from_library == from_oracle);
  }
}

TEST_CASE("canonical key is a relabelling invariant") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + static_cast<int>(rng() % 8);
    auto g = random_connected_graph(n, 0.4, rng);
    REQUIRE(g);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> relabelled;
    for (auto [u, v] : g->edges()) relabelled.push_back({perm[u], perm[v]});
    const Graph h(n, relabelled);
    CHECK(canonical_key(h) == canonical_key(*g));
    CHECK(canonical_key(*g) <= adjacency_key(*g));
    CHECK(graph_from_key(n, adjacency_key(*g)) == *g);
  }
  // Non-isomorphic graphs with equal degree sequences.
  const std::vector<int> k33{3, 3};
  const Graph prism = [] {
    const std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
    return Graph(6, e);
  }();
  CHECK(canonical_key(prism) != canonical_key(complete_multipartite(k33)));
}

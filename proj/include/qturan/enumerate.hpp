#pragma once

#include <cstdint>
#include <vector>

#include "qturan/graph.hpp"

namespace qturan {

inline constexpr int kMaxEnumerationOrder = 7;

// Canonical form: the upper-triangle adjacency bits in graph6 column order
// (01, 02, 12, 03, ...), read as a binary number with the first pair as the
// most significant bit, minimized over all vertex permutations. Supports n <= 11.
std::uint64_t canonical_key(const Graph& g);
Graph graph_from_key(int n, std::uint64_t key);
std::uint64_t adjacency_key(const Graph& g);

// One canonical representative per isomorphism class of connected graphs on
// n vertices, sorted by edge count then canonical key. 1 <= n <= 7.
std::vector<Graph> enumerate_connected_graphs(int n);

}  // namespace qturan

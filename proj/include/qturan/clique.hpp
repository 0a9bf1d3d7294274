#pragma once

#include <functional>
#include <vector>

#include "qturan/graph.hpp"

namespace qturan {

struct MaxClique {
  int omega = 0;
  std::vector<int> witness;
};

// c(v) and c(e): the order of the largest clique through a vertex or edge.
// per_edge is aligned with Graph::edges().
struct CliqueProfile {
  int omega = 0;
  std::vector<int> per_vertex;
  std::vector<int> per_edge;
  std::vector<int> witness;

  bool operator==(const CliqueProfile&) const = default;
};

// Same quantities restricted to balanced complete subgraphs.
struct BalancedCliqueProfile {
  int omega_b = 0;
  std::vector<int> per_vertex;
  std::vector<int> per_edge;
  std::vector<int> witness;

  bool operator==(const BalancedCliqueProfile&) const = default;
};

struct BalanceCertificate {
  bool balanced = true;
  // eta(v) in {+1, -1}; switching by it makes every edge positive. Empty if unbalanced.
  std::vector<int> switching;
  // Vertex cycle with sign -1. Empty if balanced.
  std::vector<int> odd_cycle;
};

// Bron–Kerbosch with pivoting (pivot maximizes |P ∩ N(u)|, lowest index on
// ties); each maximal clique is reported once, vertices ascending.
void for_each_maximal_clique(const Graph& g, const std::function<void(const std::vector<int>&)>& visit);

MaxClique max_clique(const Graph& g);
CliqueProfile clique_profile(const Graph& g);

BalanceCertificate check_balance(const SignedGraph& s);
BalancedCliqueProfile balanced_clique_profile(const SignedGraph& s);

inline constexpr int kMaxFrustrationOrder = 24;
// Minimum number of negative edges over all switchings; n <= 24.
int frustration_index(const SignedGraph& s);

}  // namespace qturan

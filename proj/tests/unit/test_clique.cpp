#include <doctest.h>

#include <algorithm>
#include <random>

#include "../support/oracles.hpp"
#include "qturan/clique.hpp"
#include "qturan/enumerate.hpp"
#include "qturan/errors.hpp"
#include "qturan/generators.hpp"

using namespace qturan;

namespace {

SignedGraph random_signs(const Graph& g, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<int> signs(g.size());
  for (auto& s : signs) s = coin(rng) ? 1 : -1;
  return SignedGraph(g, signs);
}

}  // namespace

TEST_CASE("clique profile examples") {
  const CliqueProfile paw = clique_profile(paw_graph());
  CHECK(paw.omega == 3);
  CHECK(paw.per_vertex == std::vector<int>{3, 3, 3, 2});
  const std::vector<int> k222{2, 2, 2};
  CHECK(clique_profile(complete_multipartite(k222)).omega == 3);
  CHECK(clique_profile(petersen_graph()).omega == 2);
  CHECK(clique_profile(complete_graph(7)).omega == 7);
  const CliqueProfile lone = clique_profile(Graph(3));
  CHECK(lone.omega == 1);
  CHECK(lone.per_vertex == std::vector<int>{1, 1, 1});
  CHECK(max_clique(complete_graph(5)).witness.size() == 5);
}

TEST_CASE("maximal cliques of the paw") {
  std::vector<std::vector<int>> seen;
  for_each_maximal_clique(paw_graph(), [&](const std::vector<int>& c) { seen.push_back(c); });
  std::sort(seen.begin(), seen.end());
  CHECK(seen == std::vector<std::vector<int>>{{0, 1, 2}, {0, 3}});
}

TEST_CASE("clique profile matches subset oracle on all connected graphs up to 6 vertices") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) {
      const CliqueProfile p = clique_profile(g);
      const oracle::Profile o = oracle::clique_profile(g);
      REQUIRE(p.omega == o.omega);
      REQUIRE(p.per_vertex == o.per_vertex);
      REQUIRE(p.per_edge == o.per_edge);
      CHECK(oracle::is_clique(g, [&] {
        std::uint32_t m = 0;
        for (int v : p.witness) m |= 1u << v;
        return m;
      }()));
      CHECK(static_cast<int>(p.witness.size()) == p.omega);
    }
}

TEST_CASE("balance detection") {
  const Graph k4 = complete_graph(4);
  CHECK(check_balance(SignedGraph(k4)).balanced);
  const SignedGraph neg = SignedGraph(k4).negated();
  const BalanceCertificate c = check_balance(neg);
  CHECK_FALSE(c.balanced);
  CHECK(cycle_sign(neg, c.odd_cycle) == -1);

  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    const SignedGraph s = random_signs(complete_graph(6), rng);
    const BalanceCertificate cert = check_balance(s);
    if (cert.balanced) {
      CHECK(switch_by(s, cert.switching).negative_edge_count() == 0);
      CHECK(oracle::frustration_index(s) == 0);
    } else {
      CHECK(cycle_sign(s, cert.odd_cycle) == -1);
      CHECK(oracle::frustration_index(s) > 0);
    }
  }
}

TEST_CASE("balanced clique profile of the counterexample family") {
  for (int n = 4; n <= 12; ++n) {
    const BalancedCliqueProfile p = balanced_clique_profile(gamma_n(n));
    CHECK(p.omega_b == n - 1);
    const auto idx = gamma_n(n).underlying().edge_index(0, 1);
    REQUIRE(idx);
    CHECK(p.per_edge[*idx] == 2);
  }
  // Scales to large complete graphs.
  CHECK(balanced_clique_profile(gamma_n(50)).omega_b == 49);
}

TEST_CASE("balanced clique profile matches subset oracle") {
  for (int n = 1; n <= 4; ++n)
    for (const Graph& g : enumerate_connected_graphs(n))
      for (std::uint32_t mask = 0; mask < (1u << g.size()); ++mask) {
        std::vector<int> signs(g.size());
        for (std::size_t e = 0; e < g.size(); ++e) signs[e] = (mask >> e & 1) ? -1 : 1;
        const SignedGraph s(g, signs);
        const BalancedCliqueProfile p = balanced_clique_profile(s);
        const oracle::Profile o = oracle::balanced_clique_profile(s);
        REQUIRE(p.omega_b == o.omega);
        REQUIRE(p.per_vertex == o.per_vertex);
        REQUIRE(p.per_edge == o.per_edge);
      }
  std::mt19937_64 rng(8);
  for (const Graph& g : enumerate_connected_graphs(5))
    for (int t = 0; t < 20; ++t) {
      const SignedGraph s = random_signs(g, rng);
      const BalancedCliqueProfile p = balanced_clique_profile(s);
      const oracle::Profile o = oracle::balanced_clique_profile(s);
      REQUIRE(p.omega_b == o.omega);
      REQUIRE(p.per_vertex == o.per_vertex);
      REQUIRE(p.per_edge == o.per_edge);
    }
}

TEST_CASE("frustration index matches switching brute force") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 150; ++t) {
    const int n = 2 + static_cast<int>(rng() % 9);
    auto g = random_connected_graph(n, 0.5, rng);
    REQUIRE(g);
    const SignedGraph s = random_signs(*g, rng);
    CHECK(frustration_index(s) == oracle::frustration_index(s));
  }
  CHECK(frustration_index(gamma_n(6)) == 1);
  CHECK_THROWS_AS(frustration_index(SignedGraph(complete_graph(25))), UnsupportedSizeError);
}

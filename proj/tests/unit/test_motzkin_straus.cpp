#include <doctest.h>

#include <random>

#include "qturan/clique.hpp"
#include "qturan/errors.hpp"
#include "qturan/generators.hpp"
#include "qturan/matrix.hpp"
#include "qturan/motzkin_straus.hpp"

using namespace qturan;
using doctest::Approx;

TEST_CASE("simplex points") {
  const SimplexPoint u = uniform_point(4);
  CHECK(u.on_simplex());
  CHECK(u.support().size() == 4);
  const SimplexPoint b = biased_point(5, 2);
  CHECK(b.on_simplex());
  CHECK(b.x[2] == Approx(0.9));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) CHECK(sample_simplex(6, rng).on_simplex());
}

TEST_CASE("replicator dynamics is monotone") {
  const SymMatrix a = adjacency_matrix(paw_graph());
  double last = -1.0;
  bool monotone = true;
  std::mt19937_64 rng(3);
  const auto run = replicator_dynamics(a, sample_simplex(4, rng), 10000, 1e-12, [&](double v) {
    if (v < last - 1e-14) monotone = false;
    last = v;
  });
  CHECK(monotone);
  CHECK(run.point.on_simplex(1e-9));
  CHECK(run.value <= 2.0 / 3.0 + 1e-12);
}

TEST_CASE("Motzkin-Straus clique estimates") {
  const SymMatrix k5 = adjacency_matrix(complete_graph(5));
  CHECK(simplex_qp_max(k5, {}).value == Approx(0.8).epsilon(1e-10));
  CHECK(ms_clique_estimate(complete_graph(5)).omega == 5);
  const auto pet = ms_clique_estimate(petersen_graph());
  CHECK(pet.omega == 2);
  CHECK(pet.certified);
  CHECK(ms_clique_estimate(paw_graph()).omega == 3);
  CHECK_THROWS_AS(ms_clique_estimate(Graph(3)), DomainError);
}

TEST_CASE("weighted Motzkin-Straus form") {
  const auto k3 = verify_weighted_ms(complete_graph(3), uniform_point(3));
  CHECK(k3.value == Approx(1.0).epsilon(1e-12));
  CHECK(k3.holds);
  CHECK(k3.equality_structure);

  const auto c5 = verify_weighted_ms(cycle_graph(5), uniform_point(5));
  CHECK(c5.value == Approx(0.8).epsilon(1e-12));
  CHECK(c5.holds);
  CHECK_FALSE(c5.equality_structure);

  const std::vector<int> k23{2, 3};
  const auto bip = verify_weighted_ms(complete_multipartite(k23), SimplexPoint{{0.25, 0.25, 0.5 / 3, 0.5 / 3, 0.5 / 3}});
  CHECK(bip.value == Approx(1.0).epsilon(1e-12));
  CHECK(bip.equality_structure);

  std::mt19937_64 rng(5);
  const Graph g = petersen_graph();
  for (int t = 0; t < 2000; ++t) CHECK(verify_weighted_ms(g, sample_simplex(10, rng)).holds);
}

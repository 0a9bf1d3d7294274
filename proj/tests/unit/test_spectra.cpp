#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "../support/oracles.hpp"
#include "qturan/errors.hpp"
#include "qturan/generators.hpp"
#include "qturan/matrix.hpp"
#include "qturan/spectra.hpp"

using namespace qturan;
using doctest::Approx;

TEST_CASE("matrix identities") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    auto g = random_connected_graph(7, 0.5, rng);
    REQUIRE(g);
    const SymMatrix a = adjacency_matrix(*g);
    const SymMatrix q = signless_laplacian_matrix(*g);
    const SymMatrix l = laplacian_matrix(*g);
    const SymMatrix half = a_alpha_matrix(*g, 0.5);
    const SymMatrix signed_q = signed_signless_laplacian_matrix(WeightedSignedGraph(SignedGraph(*g)));
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        CHECK(q(i, j) == l(i, j) + 2 * a(i, j));
        CHECK(half(i, j) == Approx(q(i, j) / 2));
        CHECK(signed_q(i, j) == q(i, j));
      }
    CHECK(a_alpha_matrix(*g, 0.0) == a);
  }
  CHECK_THROWS_AS(a_alpha_matrix(complete_graph(3), 1.5), ArgumentError);
  CHECK(build_matrix(complete_graph(3), MatrixKind::SignlessLaplacian) == signless_laplacian_matrix(complete_graph(3)));
}

TEST_CASE("weighted signed signless Laplacian entries") {
  const std::vector<Edge> e{{0, 1}};
  const WeightedSignedGraph ws(SignedGraph(Graph(2, e), {-1}), {2.0, 8.0});
  const SymMatrix q = signed_signless_laplacian_matrix(ws);
  CHECK(q(0, 0) == 8.0);
  CHECK(q(1, 1) == 2.0);
  CHECK(q(0, 1) == Approx(-4.0));
}

TEST_CASE("eigen decomposition examples") {
  SymMatrix d(3);
  d.set(0, 0, 1.0);
  d.set(1, 1, 3.0);
  d.set(2, 2, 2.0);
  const auto e = eigen_sym(d);
  CHECK(e.values == std::vector<double>{3.0, 2.0, 1.0});

  const auto k3 = eigen_sym(adjacency_matrix(complete_graph(3)));
  CHECK(k3.values[0] == Approx(2.0).epsilon(1e-12));
  CHECK(k3.values[1] == Approx(-1.0).epsilon(1e-12));
  CHECK(k3.values[2] == Approx(-1.0).epsilon(1e-12));

  const auto p3 = eigen_sym(signless_laplacian_matrix(path_graph(3)));
  CHECK(p3.values[0] == Approx(3.0).epsilon(1e-12));
  CHECK(p3.values[1] == Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(p3.values[2]) < 1e-12);
}

TEST_CASE("eigenpairs satisfy M v = lambda v") {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> normal;
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + static_cast<int>(rng() % 15);
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m.set(i, j, normal(rng));
    const auto e = eigen_sym(m);
    for (int k = 0; k < n; ++k) {
      const auto mv = m.multiply(e.vectors[k]);
      for (int i = 0; i < n; ++i) CHECK(std::abs(mv[i] - e.values[k] * e.vectors[k][i]) < 1e-9);
      if (k > 0) CHECK(e.values[k - 1] >= e.values[k]);
    }
    const double trace = [&] {
      double s = 0;
      for (int i = 0; i < n; ++i) s += m(i, i);
      return s;
    }();
    CHECK(std::accumulate(e.values.begin(), e.values.end(), 0.0) == Approx(trace).epsilon(1e-10));
  }
}

TEST_CASE("q index examples") {
  for (int n = 2; n <= 9; ++n) CHECK(q_index(complete_graph(n)).lambda_max == Approx(2.0 * (n - 1)).epsilon(1e-12));
  for (int a = 1; a <= 4; ++a)
    for (int b = a; b <= 5; ++b) {
      const std::vector<int> parts{a, b};
      CHECK(q_index(complete_multipartite(parts)).lambda_max == Approx(a + b).epsilon(1e-12));
    }
  CHECK(q_index(path_graph(4)).lambda_max == Approx(2.0 + std::sqrt(2.0)).epsilon(1e-12));
  CHECK(q_index(paw_graph()).lambda_max == Approx(4.561552812808830).epsilon(1e-12));
  CHECK_THROWS_AS(q_index(Graph(3)), DomainError);
}

TEST_CASE("leading eigenvalues agree with power iteration") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + static_cast<int>(rng() % 10);
    auto g = random_connected_graph(n, 0.5, rng);
    REQUIRE(g);
    CHECK(q_index(*g).lambda_max == Approx(oracle::power_lambda_max(oracle::signless_laplacian(*g))).epsilon(1e-9));
    CHECK(lambda1(*g).lambda_max == Approx(oracle::power_lambda_max(oracle::adjacency(*g))).epsilon(1e-9));
  }
}

TEST_CASE("A_alpha at one half is half the signless Laplacian") {
  const Graph g = petersen_graph();
  CHECK(lambda1_a_alpha(g, 0.5).lambda_max == Approx(q_index(g).lambda_max / 2).epsilon(1e-12));
  CHECK(lambda1_a_alpha(g, 0.0).lambda_max == Approx(3.0).epsilon(1e-12));
}

TEST_CASE("signed spectra") {
  // Switching conjugates A(Gamma) by a diagonal sign matrix.
  const SignedGraph g5 = gamma_n(5);
  const std::vector<int> subset{0, 2};
  CHECK(lambda1_signed_adjacency(switch_vertices(g5, subset)).lambda_max ==
        Approx(lambda1_signed_adjacency(g5).lambda_max).epsilon(1e-12));
  for (int n = 4; n <= 10; ++n) {
    const double closed = (3.0 * n - 6 + std::sqrt(n * n + 4.0 * n - 12)) / 2;
    CHECK(std::abs(q_signed(gamma_n(n)).lambda_max - closed) < 1e-10);
  }
}

TEST_CASE("half-Q matrix has leading eigenvalue q/2") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const int n = 3 + static_cast<int>(rng() % 8);
    auto g = random_connected_graph(n, 0.5, rng);
    REQUIRE(g);
    const auto q = q_index(*g);
    const auto x = perron_simplex_vector(q);
    CHECK(std::accumulate(x.begin(), x.end(), 0.0) == Approx(1.0).epsilon(1e-12));
    for (double v : x) CHECK(v > 0);
    const double lm = leading_eigenpair(half_q_matrix(*g, x)).lambda_max;
    CHECK(std::abs(lm - q.lambda_max / 2) < 1e-8);
  }
  const std::vector<double> bad{0.5, 0.5, 0.0};
  CHECK_THROWS_AS(half_q_matrix(path_graph(3), bad), DomainError);
}

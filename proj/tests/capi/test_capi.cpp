#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "qturan/qturan.h"

using doctest::Approx;

TEST_CASE("graph handles") {
  qt_graph* g = nullptr;
  REQUIRE(qt_graph_from_graph6("C~", &g) == QT_OK);
  CHECK(qt_graph_order(g) == 4);
  CHECK(qt_graph_size(g) == 6);
  CHECK(qt_graph_is_connected(g) == 1);
  int u = -1, v = -1;
  CHECK(qt_graph_edge(g, 5, &u, &v) == QT_OK);
  CHECK(u == 2);
  CHECK(v == 3);
  CHECK(qt_graph_edge(g, 6, &u, &v) == QT_ERROR_ARGUMENT);

  size_t needed = 0;
  char tiny[2];
  CHECK(qt_graph_to_graph6(g, tiny, sizeof tiny, &needed) == QT_ERROR_BUFFER_TOO_SMALL);
  CHECK(needed == 3);
  char buf[16];
  CHECK(qt_graph_to_graph6(g, buf, sizeof buf, &needed) == QT_OK);
  CHECK(std::string(buf) == "C~");
  qt_graph_free(g);

  CHECK(qt_graph_from_graph6("A`", &g) == QT_ERROR_PARSE);
  CHECK(std::string(qt_last_error_message()).find("offset") != std::string::npos);
  CHECK(qt_graph_from_graph6(nullptr, &g) == QT_ERROR_NULL_POINTER);

  const int endpoints[] = {0, 0};
  CHECK(qt_graph_from_edges(2, endpoints, 1, &g) == QT_ERROR_ARGUMENT);
  qt_graph_free(nullptr);
}

TEST_CASE("enumeration, matrices and spectra") {
  qt_graph** graphs = nullptr;
  size_t count = 0;
  REQUIRE(qt_graph_enumerate_connected(5, &graphs, &count) == QT_OK);
  CHECK(count == 21);
  qt_graph_array_free(graphs, count);
  CHECK(qt_graph_enumerate_connected(8, &graphs, &count) == QT_ERROR_UNSUPPORTED_SIZE);

  const int parts[] = {3, 4};
  qt_graph* k34 = nullptr;
  REQUIRE(qt_graph_complete_multipartite(parts, 2, &k34) == QT_OK);
  double q = 0.0;
  std::vector<double> perron(7);
  CHECK(qt_q_index(k34, &q, perron.data()) == QT_OK);
  CHECK(q == Approx(7.0).epsilon(1e-12));
  double half = 0.0;
  CHECK(qt_half_q_lambda1(k34, &half) == QT_OK);
  CHECK(half == Approx(3.5).epsilon(1e-10));
  double bound = 0.0;
  CHECK(qt_bound_vertex_localized_q(k34, &bound) == QT_OK);
  CHECK(bound == Approx(7.0).epsilon(1e-12));
  qt_classification kind;
  int part_count = 0;
  CHECK(qt_classify(k34, &kind, &part_count) == QT_OK);
  CHECK(kind == QT_CLASS_COMPLETE_BIPARTITE);
  CHECK(part_count == 2);

  std::vector<double> m(49), values(7);
  CHECK(qt_graph_matrix(k34, QT_MATRIX_SIGNLESS_LAPLACIAN, 0.0, m.data()) == QT_OK);
  CHECK(m[0] == 4.0);
  CHECK(qt_eigenvalues(m.data(), 7, values.data()) == QT_OK);
  CHECK(values[0] == Approx(7.0).epsilon(1e-12));

  int omega = 0;
  std::vector<int> cv(7);
  CHECK(qt_clique_profile(k34, &omega, cv.data(), nullptr) == QT_OK);
  CHECK(omega == 2);
  CHECK(cv[0] == 2);
  qt_graph_free(k34);

  const int isolated[] = {0, 1};
  qt_graph* dis = nullptr;
  REQUIRE(qt_graph_from_edges(3, isolated, 1, &dis) == QT_OK);
  CHECK(qt_q_index(dis, &q, nullptr) == QT_ERROR_DOMAIN);
  qt_graph_free(dis);
}

TEST_CASE("signed graphs") {
  qt_signed_graph* s = nullptr;
  REQUIRE(qt_signed_gamma_n(4, &s) == QT_OK);
  double q = 0.0;
  CHECK(qt_signed_q_index(s, &q) == QT_OK);
  CHECK(q == Approx(3.0 + std::sqrt(5.0)).epsilon(1e-12));
  int balanced = 1, eps = -1, omega_b = 0;
  CHECK(qt_signed_is_balanced(s, &balanced) == QT_OK);
  CHECK(balanced == 0);
  CHECK(qt_signed_frustration_index(s, &eps) == QT_OK);
  CHECK(eps == 1);
  CHECK(qt_balanced_clique_profile(s, &omega_b, nullptr, nullptr) == QT_OK);
  CHECK(omega_b == 3);

  size_t needed = 0;
  CHECK(qt_signed_to_sg(s, nullptr, 0, &needed) == QT_ERROR_BUFFER_TOO_SMALL);
  std::string text(needed, '\0');
  CHECK(qt_signed_to_sg(s, text.data(), needed, &needed) == QT_OK);
  qt_signed_graph* back = nullptr;
  CHECK(qt_signed_from_sg(text.c_str(), &back) == QT_OK);
  CHECK(qt_signed_q_index(back, &q) == QT_OK);
  CHECK(q == Approx(3.0 + std::sqrt(5.0)).epsilon(1e-12));
  qt_signed_free(back);

  qt_report* r = nullptr;
  REQUIRE(qt_report_signed(s, &r) == QT_OK);
  qt_bound_record rec;
  CHECK(qt_report_find(r, "signed-edge-q-conjecture", &rec) == QT_OK);
  CHECK(rec.asserted == 0);
  CHECK(rec.slack < 0);
  CHECK(qt_report_find(r, "nope", &rec) == QT_ERROR_ARGUMENT);
  CHECK(std::strstr(qt_report_json(r), "\"omega_b\"") != nullptr);
  qt_report_free(r);
  qt_signed_free(s);

  qt_graph* edge = nullptr;
  const int e[] = {0, 1};
  REQUIRE(qt_graph_from_edges(2, e, 1, &edge) == QT_OK);
  const double bad_weights[] = {1.0, -1.0};
  CHECK(qt_signed_from_graph(edge, nullptr, bad_weights, &s) == QT_ERROR_DOMAIN);
  const double weights[] = {2.0, 3.0};
  REQUIRE(qt_signed_from_graph(edge, nullptr, weights, &s) == QT_OK);
  double b = 0.0;
  CHECK(qt_bound_weighted_signed(s, &b) == QT_OK);
  CHECK(b == Approx(5.0).epsilon(1e-12));
  qt_signed_free(s);
  qt_graph_free(edge);
}

TEST_CASE("runs") {
  qt_run_config* cfg = nullptr;
  CHECK(qt_run_config_new("prove", &cfg) == QT_ERROR_ARGUMENT);
  REQUIRE(qt_run_config_new("verify", &cfg) == QT_OK);
  CHECK(qt_run_config_set_enumerate(cfg, 5) == QT_OK);
  CHECK(qt_run_config_set_theorems(cfg, "vertex-q,a-alpha") == QT_OK);
  qt_run_summary* s = nullptr;
  REQUIRE(qt_run(cfg, &s) == QT_OK);
  CHECK(qt_run_summary_processed(s) == 21);
  CHECK(qt_run_summary_violation_count(s) == 0);
  CHECK(qt_run_summary_exit_code(s) == 0);
  CHECK(std::strstr(qt_run_summary_json(s), "\"processed\": 21") != nullptr);
  CHECK(std::strncmp(qt_run_summary_csv(s), "graph,n,m,omega", 15) == 0);
  qt_run_summary_free(s);

  CHECK(qt_run_config_set_tol(cfg, 0.0) == QT_OK);
  CHECK(qt_run(cfg, &s) == QT_ERROR_ARGUMENT);
  qt_run_config_free(cfg);
}

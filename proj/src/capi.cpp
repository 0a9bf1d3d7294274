#include "qturan/qturan.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "qturan/bounds.hpp"
#include "qturan/clique.hpp"
#include "qturan/enumerate.hpp"
#include "qturan/errors.hpp"
#include "qturan/formats.hpp"
#include "qturan/generators.hpp"
#include "qturan/harness.hpp"
#include "qturan/report_io.hpp"
#include "qturan/spectra.hpp"

struct qt_graph {
  qturan::Graph graph;
};

struct qt_signed_graph {
  qturan::WeightedSignedGraph graph;
};

struct qt_report {
  qturan::BoundReport report;
  std::string json;
  std::string csv;
};

struct qt_run_config {
  qturan::RunConfig config;
};

struct qt_run_summary {
  qturan::RunSummary summary;
  std::string json;
  std::string csv;
  std::string text;
};

namespace {

thread_local std::string last_error;

qt_status fail(qt_status status, const char* message) {
  last_error = message;
  return status;
}

qt_status status_of(qturan::ErrorKind kind) {
  switch (kind) {
    case qturan::ErrorKind::Parse:
      return QT_ERROR_PARSE;
    case qturan::ErrorKind::Argument:
      return QT_ERROR_ARGUMENT;
    case qturan::ErrorKind::Domain:
      return QT_ERROR_DOMAIN;
    case qturan::ErrorKind::UnsupportedSize:
      return QT_ERROR_UNSUPPORTED_SIZE;
    case qturan::ErrorKind::Numerical:
      return QT_ERROR_NUMERICAL;
    case qturan::ErrorKind::Io:
      return QT_ERROR_IO;
  }
  return QT_ERROR_INTERNAL;
}

template <class F>
qt_status guarded(F&& body) {
  try {
    body();
    return QT_OK;
  } catch (const qturan::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(QT_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QT_ERROR_INTERNAL, e.what());
  }
}

#define QT_REQUIRE(ptr) \
  if (!(ptr)) return fail(QT_ERROR_NULL_POINTER, "null pointer argument: " #ptr)

qt_status copy_string(const std::string& s, char* buffer, size_t capacity, size_t* needed) {
  if (needed) *needed = s.size() + 1;
  if (!buffer || capacity < s.size() + 1) return fail(QT_ERROR_BUFFER_TOO_SMALL, "output buffer too small");
  std::memcpy(buffer, s.data(), s.size());
  buffer[s.size()] = '\0';
  return QT_OK;
}

void copy_matrix(const qturan::SymMatrix& m, double* out) {
  const int n = m.order();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i * n + j] = m(i, j);
}

qturan::MatrixKind kind_of(qt_matrix_kind kind) {
  switch (kind) {
    case QT_MATRIX_ADJACENCY:
      return qturan::MatrixKind::Adjacency;
    case QT_MATRIX_LAPLACIAN:
      return qturan::MatrixKind::Laplacian;
    case QT_MATRIX_SIGNLESS_LAPLACIAN:
      return qturan::MatrixKind::SignlessLaplacian;
    case QT_MATRIX_A_ALPHA:
      return qturan::MatrixKind::AAlpha;
    case QT_MATRIX_SIGNED_ADJACENCY:
      return qturan::MatrixKind::SignedAdjacency;
    case QT_MATRIX_SIGNED_LAPLACIAN:
      return qturan::MatrixKind::SignedLaplacian;
    case QT_MATRIX_SIGNED_SIGNLESS_LAPLACIAN:
      return qturan::MatrixKind::SignedSignlessLaplacian;
  }
  throw qturan::ArgumentError("unknown matrix kind");
}

void fill_record(const qturan::BoundRecord& b, qt_bound_record* out) {
  out->name = b.name.c_str();
  out->value = b.value;
  out->measured = b.measured;
  out->slack = b.slack;
  out->equality = b.equality;
  out->asserted = b.asserted;
  out->squared = b.squared;
  out->skipped = b.skipped;
}

qt_report* wrap_report(qturan::BoundReport r) {
  auto* h = new qt_report{std::move(r), {}, {}};
  h->json = qturan::to_json(h->report).dump(2);
  h->csv = qturan::csv_header() + qturan::csv_rows(h->report);
  return h;
}

}  // namespace

extern "C" {

const char* qt_version(void) { return "1.0.0"; }

const char* qt_status_string(qt_status status) {
  switch (status) {
    case QT_OK:
      return "ok";
    case QT_ERROR_PARSE:
      return "parse error";
    case QT_ERROR_ARGUMENT:
      return "invalid argument";
    case QT_ERROR_DOMAIN:
      return "domain error";
    case QT_ERROR_UNSUPPORTED_SIZE:
      return "unsupported size";
    case QT_ERROR_NUMERICAL:
      return "numerical error";
    case QT_ERROR_IO:
      return "i/o error";
    case QT_ERROR_NULL_POINTER:
      return "null pointer";
    case QT_ERROR_BUFFER_TOO_SMALL:
      return "buffer too small";
    case QT_ERROR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* qt_last_error_message(void) { return last_error.c_str(); }

/* graphs */

qt_status qt_graph_from_graph6(const char* line, qt_graph** out) {
  QT_REQUIRE(line);
  QT_REQUIRE(out);
  return guarded([&] { *out = new qt_graph{qturan::parse_graph6(line)}; });
}

qt_status qt_graph_from_edges(int n, const int* endpoints, size_t m, qt_graph** out) {
  QT_REQUIRE(out);
  if (m > 0) QT_REQUIRE(endpoints);
  return guarded([&] {
    std::vector<qturan::Edge> edges(m);
    for (size_t i = 0; i < m; ++i) edges[i] = {endpoints[2 * i], endpoints[2 * i + 1]};
    *out = new qt_graph{qturan::Graph(n, edges)};
  });
}

qt_status qt_graph_complete_multipartite(const int* parts, size_t count, qt_graph** out) {
  QT_REQUIRE(out);
  if (count > 0) QT_REQUIRE(parts);
  return guarded([&] { *out = new qt_graph{qturan::complete_multipartite(std::span<const int>(parts, count))}; });
}

void qt_graph_free(qt_graph* g) { delete g; }

int qt_graph_order(const qt_graph* g) { return g ? g->graph.order() : 0; }
size_t qt_graph_size(const qt_graph* g) { return g ? g->graph.size() : 0; }
int qt_graph_is_connected(const qt_graph* g) { return g ? qturan::is_connected(g->graph) : 0; }

qt_status qt_graph_edge(const qt_graph* g, size_t i, int* u, int* v) {
  QT_REQUIRE(g);
  QT_REQUIRE(u);
  QT_REQUIRE(v);
  if (i >= g->graph.size()) return fail(QT_ERROR_ARGUMENT, "edge index out of range");
  *u = g->graph.edges()[i].u;
  *v = g->graph.edges()[i].v;
  return QT_OK;
}

qt_status qt_graph_to_graph6(const qt_graph* g, char* buffer, size_t capacity, size_t* needed) {
  QT_REQUIRE(g);
  std::string s;
  const qt_status st = guarded([&] { s = qturan::write_graph6(g->graph); });
  return st == QT_OK ? copy_string(s, buffer, capacity, needed) : st;
}

qt_status qt_graph_enumerate_connected(int n, qt_graph*** out, size_t* count) {
  QT_REQUIRE(out);
  QT_REQUIRE(count);
  return guarded([&] {
    auto graphs = qturan::enumerate_connected_graphs(n);
    auto arr = std::make_unique<qt_graph*[]>(graphs.size());
    for (size_t i = 0; i < graphs.size(); ++i) arr[i] = new qt_graph{std::move(graphs[i])};
    *count = graphs.size();
    *out = arr.release();
  });
}

void qt_graph_array_free(qt_graph** graphs, size_t count) {
  if (!graphs) return;
  for (size_t i = 0; i < count; ++i) delete graphs[i];
  delete[] graphs;
}

qt_status qt_graph_matrix(const qt_graph* g, qt_matrix_kind kind, double alpha, double* out) {
  QT_REQUIRE(g);
  QT_REQUIRE(out);
  return guarded([&] { copy_matrix(qturan::build_matrix(g->graph, kind_of(kind), alpha), out); });
}

qt_status qt_eigenvalues(const double* matrix, int n, double* values) {
  if (n > 0) {
    QT_REQUIRE(matrix);
    QT_REQUIRE(values);
  }
  return guarded([&] {
    if (n < 0) throw qturan::ArgumentError("matrix order must be nonnegative");
    qturan::SymMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        if (matrix[i * n + j] != matrix[j * n + i]) throw qturan::ArgumentError("matrix is not symmetric");
        m.set(i, j, matrix[i * n + j]);
      }
    const auto eig = qturan::eigen_sym(m);
    std::copy(eig.values.begin(), eig.values.end(), values);
  });
}

/* spectra, cliques, bounds */

qt_status qt_q_index(const qt_graph* g, double* q, double* perron) {
  QT_REQUIRE(g);
  QT_REQUIRE(q);
  return guarded([&] {
    const auto s = qturan::q_index(g->graph);
    *q = s.lambda_max;
    if (perron) std::copy(s.eigenvector.begin(), s.eigenvector.end(), perron);
  });
}

qt_status qt_lambda1(const qt_graph* g, double* lambda1) {
  QT_REQUIRE(g);
  QT_REQUIRE(lambda1);
  return guarded([&] { *lambda1 = qturan::lambda1(g->graph).lambda_max; });
}

qt_status qt_lambda1_a_alpha(const qt_graph* g, double alpha, double* lambda1) {
  QT_REQUIRE(g);
  QT_REQUIRE(lambda1);
  return guarded([&] { *lambda1 = qturan::lambda1_a_alpha(g->graph, alpha).lambda_max; });
}

qt_status qt_half_q_lambda1(const qt_graph* g, double* lambda1) {
  QT_REQUIRE(g);
  QT_REQUIRE(lambda1);
  return guarded([&] {
    const auto x = qturan::perron_simplex_vector(qturan::q_index(g->graph));
    *lambda1 = qturan::leading_eigenpair(qturan::half_q_matrix(g->graph, x)).lambda_max;
  });
}

qt_status qt_clique_profile(const qt_graph* g, int* omega, int* per_vertex, int* per_edge) {
  QT_REQUIRE(g);
  QT_REQUIRE(omega);
  return guarded([&] {
    const auto p = qturan::clique_profile(g->graph);
    *omega = p.omega;
    if (per_vertex) std::copy(p.per_vertex.begin(), p.per_vertex.end(), per_vertex);
    if (per_edge) std::copy(p.per_edge.begin(), p.per_edge.end(), per_edge);
  });
}

qt_status qt_classify(const qt_graph* g, qt_classification* kind, int* part_count) {
  QT_REQUIRE(g);
  QT_REQUIRE(kind);
  return guarded([&] {
    const auto c = qturan::classify_equality(g->graph);
    using K = qturan::Classification::Kind;
    switch (c.kind) {
      case K::CompleteBipartite:
        *kind = QT_CLASS_COMPLETE_BIPARTITE;
        break;
      case K::RegularCompleteMultipartite:
        *kind = QT_CLASS_REGULAR_COMPLETE_MULTIPARTITE;
        break;
      case K::CompleteMultipartiteIrregular:
        *kind = QT_CLASS_COMPLETE_MULTIPARTITE_IRREGULAR;
        break;
      case K::Other:
        *kind = QT_CLASS_OTHER;
        break;
    }
    if (part_count) *part_count = static_cast<int>(c.parts.size());
  });
}

#define QT_GRAPH_SCALAR(fn, expr)                 \
  qt_status fn(const qt_graph* g, double* value) { \
    QT_REQUIRE(g);                                 \
    QT_REQUIRE(value);                             \
    return guarded([&] { *value = (expr); });      \
  }

QT_GRAPH_SCALAR(qt_bound_abreu_nikiforov, qturan::bound_abreu_nikiforov(g->graph))
QT_GRAPH_SCALAR(qt_bound_vertex_localized_q, qturan::bound_vertex_localized_q(g->graph))
QT_GRAPH_SCALAR(qt_bound_vertex_localized_lambda, qturan::bound_vertex_localized_lambda(g->graph))
QT_GRAPH_SCALAR(qt_bound_edge_localized_lambda, qturan::bound_edge_localized_lambda(g->graph))
QT_GRAPH_SCALAR(qt_conjecture_rhs, qturan::conjecture_rhs(g->graph))

#undef QT_GRAPH_SCALAR

qt_status qt_bound_a_alpha(const qt_graph* g, double alpha, double* value) {
  QT_REQUIRE(g);
  QT_REQUIRE(value);
  return guarded([&] { *value = qturan::bound_a_alpha(g->graph, alpha); });
}

/* signed graphs */

qt_status qt_signed_from_sg(const char* text, qt_signed_graph** out) {
  QT_REQUIRE(text);
  QT_REQUIRE(out);
  return guarded([&] { *out = new qt_signed_graph{qturan::parse_sg_one(text)}; });
}

qt_status qt_signed_gamma_n(int n, qt_signed_graph** out) {
  QT_REQUIRE(out);
  return guarded([&] { *out = new qt_signed_graph{qturan::WeightedSignedGraph(qturan::gamma_n(n))}; });
}

qt_status qt_signed_from_graph(const qt_graph* g, const int* signs, const double* weights, qt_signed_graph** out) {
  QT_REQUIRE(g);
  QT_REQUIRE(out);
  return guarded([&] {
    const size_t m = g->graph.size();
    const auto n = static_cast<size_t>(g->graph.order());
    std::vector<int> s = signs ? std::vector<int>(signs, signs + m) : std::vector<int>(m, 1);
    std::vector<double> w = weights ? std::vector<double>(weights, weights + n) : std::vector<double>(n, 1.0);
    *out = new qt_signed_graph{qturan::WeightedSignedGraph(qturan::SignedGraph(g->graph, std::move(s)), std::move(w))};
  });
}

void qt_signed_free(qt_signed_graph* s) { delete s; }

qt_status qt_signed_to_sg(const qt_signed_graph* s, char* buffer, size_t capacity, size_t* needed) {
  QT_REQUIRE(s);
  return copy_string(qturan::write_sg(s->graph), buffer, capacity, needed);
}

qt_status qt_signed_switch(const qt_signed_graph* s, const int* subset, size_t count, qt_signed_graph** out) {
  QT_REQUIRE(s);
  QT_REQUIRE(out);
  if (count > 0) QT_REQUIRE(subset);
  return guarded([&] {
    auto switched = qturan::switch_vertices(s->graph.signed_graph(), std::span<const int>(subset, count));
    const auto w = s->graph.weights();
    *out = new qt_signed_graph{
        qturan::WeightedSignedGraph(std::move(switched), std::vector<double>(w.begin(), w.end()))};
  });
}

qt_status qt_signed_matrix(const qt_signed_graph* s, qt_matrix_kind kind, double* out) {
  QT_REQUIRE(s);
  QT_REQUIRE(out);
  return guarded([&] { copy_matrix(qturan::build_matrix(s->graph, kind_of(kind)), out); });
}

qt_status qt_signed_q_index(const qt_signed_graph* s, double* value) {
  QT_REQUIRE(s);
  QT_REQUIRE(value);
  return guarded([&] { *value = qturan::q_signed(s->graph).lambda_max; });
}

qt_status qt_signed_is_balanced(const qt_signed_graph* s, int* balanced) {
  QT_REQUIRE(s);
  QT_REQUIRE(balanced);
  return guarded([&] { *balanced = qturan::check_balance(s->graph.signed_graph()).balanced; });
}

qt_status qt_signed_frustration_index(const qt_signed_graph* s, int* value) {
  QT_REQUIRE(s);
  QT_REQUIRE(value);
  return guarded([&] { *value = qturan::frustration_index(s->graph.signed_graph()); });
}

qt_status qt_balanced_clique_profile(const qt_signed_graph* s, int* omega_b, int* per_vertex, int* per_edge) {
  QT_REQUIRE(s);
  QT_REQUIRE(omega_b);
  return guarded([&] {
    const auto p = qturan::balanced_clique_profile(s->graph.signed_graph());
    *omega_b = p.omega_b;
    if (per_vertex) std::copy(p.per_vertex.begin(), p.per_vertex.end(), per_vertex);
    if (per_edge) std::copy(p.per_edge.begin(), p.per_edge.end(), per_edge);
  });
}

qt_status qt_bound_weighted_signed(const qt_signed_graph* s, double* value) {
  QT_REQUIRE(s);
  QT_REQUIRE(value);
  return guarded([&] { *value = qturan::bound_weighted_signed(s->graph); });
}

/* reports */

qt_status qt_report_graph(const qt_graph* g, const double* alphas, size_t alpha_count, qt_report** out) {
  QT_REQUIRE(g);
  QT_REQUIRE(out);
  if (alpha_count > 0) QT_REQUIRE(alphas);
  return guarded([&] {
    qturan::ReportOptions opt;
    if (alphas) opt.alphas.assign(alphas, alphas + alpha_count);
    auto r = qturan::full_report(g->graph, opt);
    r.graph_id = g->graph.order() <= 62 ? qturan::write_graph6(g->graph) : "graph";
    *out = wrap_report(std::move(r));
  });
}

qt_status qt_report_signed(const qt_signed_graph* s, qt_report** out) {
  QT_REQUIRE(s);
  QT_REQUIRE(out);
  return guarded([&] {
    auto r = qturan::full_report(s->graph);
    r.graph_id = "signed";
    *out = wrap_report(std::move(r));
  });
}

void qt_report_free(qt_report* r) { delete r; }
double qt_report_q(const qt_report* r) { return r ? r->report.q : 0.0; }
double qt_report_lambda1(const qt_report* r) { return r ? r->report.lambda1 : 0.0; }
size_t qt_report_bound_count(const qt_report* r) { return r ? r->report.bounds.size() : 0; }

qt_status qt_report_bound(const qt_report* r, size_t index, qt_bound_record* out) {
  QT_REQUIRE(r);
  QT_REQUIRE(out);
  if (index >= r->report.bounds.size()) return fail(QT_ERROR_ARGUMENT, "bound index out of range");
  fill_record(r->report.bounds[index], out);
  return QT_OK;
}

qt_status qt_report_find(const qt_report* r, const char* name, qt_bound_record* out) {
  QT_REQUIRE(r);
  QT_REQUIRE(name);
  QT_REQUIRE(out);
  const auto* b = r->report.find(name);
  if (!b) return fail(QT_ERROR_ARGUMENT, "no bound with that name in this report");
  fill_record(*b, out);
  return QT_OK;
}

const char* qt_report_json(const qt_report* r) { return r ? r->json.c_str() : ""; }
const char* qt_report_csv(const qt_report* r) { return r ? r->csv.c_str() : ""; }

/* command runs */

qt_status qt_run_config_new(const char* command, qt_run_config** out) {
  QT_REQUIRE(command);
  QT_REQUIRE(out);
  return guarded([&] {
    qturan::RunConfig cfg;
    cfg.command = qturan::parse_command(command);
    *out = new qt_run_config{std::move(cfg)};
  });
}

void qt_run_config_free(qt_run_config* c) { delete c; }

#define QT_CONFIG_SETTER(fn, type, stmt)     \
  qt_status fn(qt_run_config* c, type value) { \
    QT_REQUIRE(c);                             \
    stmt;                                      \
    return QT_OK;                              \
  }

QT_CONFIG_SETTER(qt_run_config_set_enumerate, int, c->config.enumerate_n = value)
QT_CONFIG_SETTER(qt_run_config_set_n_min, int, c->config.n_min = value)
QT_CONFIG_SETTER(qt_run_config_set_n_max, int, c->config.n_max = value)
QT_CONFIG_SETTER(qt_run_config_set_trials, int, c->config.trials = value)
QT_CONFIG_SETTER(qt_run_config_set_seed, uint64_t, c->config.seed = value)
QT_CONFIG_SETTER(qt_run_config_set_tol, double, c->config.tol = value)
QT_CONFIG_SETTER(qt_run_config_set_threads, int, c->config.threads = value)
QT_CONFIG_SETTER(qt_run_config_set_fail_fast, int, c->config.fail_fast = value != 0)

#undef QT_CONFIG_SETTER

qt_status qt_run_config_set_input(qt_run_config* c, const char* path) {
  QT_REQUIRE(c);
  QT_REQUIRE(path);
  c->config.input_path = path;
  return QT_OK;
}

qt_status qt_run_config_set_json_path(qt_run_config* c, const char* path) {
  QT_REQUIRE(c);
  QT_REQUIRE(path);
  c->config.json_path = path;
  return QT_OK;
}

qt_status qt_run_config_set_csv_path(qt_run_config* c, const char* path) {
  QT_REQUIRE(c);
  QT_REQUIRE(path);
  c->config.csv_path = path;
  return QT_OK;
}

qt_status qt_run_config_set_theorems(qt_run_config* c, const char* names) {
  QT_REQUIRE(c);
  QT_REQUIRE(names);
  c->config.theorems.clear();
  std::stringstream ss(names);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) c->config.theorems.push_back(item);
  return QT_OK;
}

qt_status qt_run_config_set_alphas(qt_run_config* c, const double* alphas, size_t count) {
  QT_REQUIRE(c);
  if (count > 0) QT_REQUIRE(alphas);
  c->config.alphas.assign(alphas, alphas + count);
  return QT_OK;
}

qt_status qt_run(const qt_run_config* c, qt_run_summary** out) {
  QT_REQUIRE(c);
  QT_REQUIRE(out);
  return guarded([&] {
    auto h = std::make_unique<qt_run_summary>();
    h->summary = qturan::run(c->config);
    qturan::write_outputs(h->summary, c->config);
    h->json = h->summary.to_json().dump(2);
    h->csv = h->summary.to_csv();
    h->text = h->summary.text();
    *out = h.release();
  });
}

void qt_run_summary_free(qt_run_summary* s) { delete s; }
int qt_run_summary_exit_code(const qt_run_summary* s) { return s ? s->summary.exit_code() : 1; }
size_t qt_run_summary_processed(const qt_run_summary* s) { return s ? s->summary.processed : 0; }
size_t qt_run_summary_skipped(const qt_run_summary* s) { return s ? s->summary.skipped_disconnected : 0; }
size_t qt_run_summary_violation_count(const qt_run_summary* s) { return s ? s->summary.violations.size() : 0; }
size_t qt_run_summary_equality_count(const qt_run_summary* s) { return s ? s->summary.equality_cases.size() : 0; }
const char* qt_run_summary_json(const qt_run_summary* s) { return s ? s->json.c_str() : ""; }
const char* qt_run_summary_csv(const qt_run_summary* s) { return s ? s->csv.c_str() : ""; }
const char* qt_run_summary_text(const qt_run_summary* s) { return s ? s->text.c_str() : ""; }

}  // extern "C"

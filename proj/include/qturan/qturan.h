/*
 * qturan C API.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_free function. Functions return a qt_status; on failure the
 * message for the calling thread is available from qt_last_error_message()
 * until the next failing call on that thread. Strings returned as
 * `const char*` are owned by the handle they came from.
 */
#ifndef QTURAN_QTURAN_H
#define QTURAN_QTURAN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QTURAN_BUILDING_LIBRARY)
#    define QT_API __declspec(dllexport)
#  else
#    define QT_API __declspec(dllimport)
#  endif
#else
#  define QT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qt_status {
  QT_OK = 0,
  QT_ERROR_PARSE = 1,
  QT_ERROR_ARGUMENT = 2,
  QT_ERROR_DOMAIN = 3,
  QT_ERROR_UNSUPPORTED_SIZE = 4,
  QT_ERROR_NUMERICAL = 5,
  QT_ERROR_IO = 6,
  QT_ERROR_NULL_POINTER = 7,
  QT_ERROR_BUFFER_TOO_SMALL = 8,
  QT_ERROR_INTERNAL = 9
} qt_status;

typedef enum qt_matrix_kind {
  QT_MATRIX_ADJACENCY = 0,
  QT_MATRIX_LAPLACIAN = 1,
  QT_MATRIX_SIGNLESS_LAPLACIAN = 2,
  QT_MATRIX_A_ALPHA = 3,
  QT_MATRIX_SIGNED_ADJACENCY = 4,
  QT_MATRIX_SIGNED_LAPLACIAN = 5,
  QT_MATRIX_SIGNED_SIGNLESS_LAPLACIAN = 6
} qt_matrix_kind;

typedef enum qt_classification {
  QT_CLASS_COMPLETE_BIPARTITE = 0,
  QT_CLASS_REGULAR_COMPLETE_MULTIPARTITE = 1,
  QT_CLASS_COMPLETE_MULTIPARTITE_IRREGULAR = 2,
  QT_CLASS_OTHER = 3
} qt_classification;

typedef struct qt_graph qt_graph;
typedef struct qt_signed_graph qt_signed_graph;
typedef struct qt_report qt_report;
typedef struct qt_run_config qt_run_config;
typedef struct qt_run_summary qt_run_summary;

typedef struct qt_bound_record {
  const char* name; /* owned by the report */
  double value;
  double measured;
  double slack;
  int equality;
  int asserted;
  int squared;
  int skipped;
} qt_bound_record;

QT_API const char* qt_version(void);
QT_API const char* qt_status_string(qt_status status);
QT_API const char* qt_last_error_message(void);

/* ---- graphs ---------------------------------------------------------- */

QT_API qt_status qt_graph_from_graph6(const char* line, qt_graph** out);
/* endpoints holds 2*m vertex indices. */
QT_API qt_status qt_graph_from_edges(int n, const int* endpoints, size_t m, qt_graph** out);
QT_API qt_status qt_graph_complete_multipartite(const int* parts, size_t count, qt_graph** out);
QT_API void qt_graph_free(qt_graph* g);

QT_API int qt_graph_order(const qt_graph* g);
QT_API size_t qt_graph_size(const qt_graph* g);
QT_API int qt_graph_is_connected(const qt_graph* g);
/* Edge i as (u, v) with u < v, in sorted order. */
QT_API qt_status qt_graph_edge(const qt_graph* g, size_t i, int* u, int* v);
/* Writes a NUL-terminated graph6 string; *needed receives the buffer size required. */
QT_API qt_status qt_graph_to_graph6(const qt_graph* g, char* buffer, size_t capacity, size_t* needed);

/* Connected graphs on n vertices (1..7), one per isomorphism class. */
QT_API qt_status qt_graph_enumerate_connected(int n, qt_graph*** out, size_t* count);
QT_API void qt_graph_array_free(qt_graph** graphs, size_t count);

/* Row-major n*n output. alpha is used only for QT_MATRIX_A_ALPHA. */
QT_API qt_status qt_graph_matrix(const qt_graph* g, qt_matrix_kind kind, double alpha, double* out);
/* Eigenvalues of a symmetric row-major n*n matrix, descending. */
QT_API qt_status qt_eigenvalues(const double* matrix, int n, double* values);

/* ---- spectra, cliques, bounds ---------------------------------------- */

/* perron may be NULL; otherwise receives the unit Perron vector (length n). */
QT_API qt_status qt_q_index(const qt_graph* g, double* q, double* perron);
QT_API qt_status qt_lambda1(const qt_graph* g, double* lambda1);
QT_API qt_status qt_lambda1_a_alpha(const qt_graph* g, double alpha, double* lambda1);
/* Largest eigenvalue of the half-Q matrix built from the 1-norm Perron vector. */
QT_API qt_status qt_half_q_lambda1(const qt_graph* g, double* lambda1);

/* per_vertex (length n) and per_edge (length m) may be NULL. */
QT_API qt_status qt_clique_profile(const qt_graph* g, int* omega, int* per_vertex, int* per_edge);
QT_API qt_status qt_classify(const qt_graph* g, qt_classification* kind, int* part_count);

QT_API qt_status qt_bound_abreu_nikiforov(const qt_graph* g, double* value);
QT_API qt_status qt_bound_vertex_localized_q(const qt_graph* g, double* value);
QT_API qt_status qt_bound_vertex_localized_lambda(const qt_graph* g, double* value);
QT_API qt_status qt_bound_edge_localized_lambda(const qt_graph* g, double* value);
QT_API qt_status qt_bound_a_alpha(const qt_graph* g, double alpha, double* value);
QT_API qt_status qt_conjecture_rhs(const qt_graph* g, double* value);

/* ---- signed graphs ---------------------------------------------------- */

/* Parses exactly one record in the .sg edge-list format. */
QT_API qt_status qt_signed_from_sg(const char* text, qt_signed_graph** out);
QT_API qt_status qt_signed_gamma_n(int n, qt_signed_graph** out);
/* signs: one per edge of g in sorted edge order (NULL = all +1); weights: one per vertex (NULL = all 1). */
QT_API qt_status qt_signed_from_graph(const qt_graph* g, const int* signs, const double* weights, qt_signed_graph** out);
QT_API void qt_signed_free(qt_signed_graph* s);
QT_API qt_status qt_signed_to_sg(const qt_signed_graph* s, char* buffer, size_t capacity, size_t* needed);
QT_API qt_status qt_signed_switch(const qt_signed_graph* s, const int* subset, size_t count, qt_signed_graph** out);
QT_API qt_status qt_signed_matrix(const qt_signed_graph* s, qt_matrix_kind kind, double* out);
QT_API qt_status qt_signed_q_index(const qt_signed_graph* s, double* value);
QT_API qt_status qt_signed_is_balanced(const qt_signed_graph* s, int* balanced);
QT_API qt_status qt_signed_frustration_index(const qt_signed_graph* s, int* value);
QT_API qt_status qt_balanced_clique_profile(const qt_signed_graph* s, int* omega_b, int* per_vertex, int* per_edge);
QT_API qt_status qt_bound_weighted_signed(const qt_signed_graph* s, double* value);

/* ---- reports ---------------------------------------------------------- */

/* alphas may be NULL (default set 0, 0.1, 0.25, 0.4, 0.5). */
QT_API qt_status qt_report_graph(const qt_graph* g, const double* alphas, size_t alpha_count, qt_report** out);
QT_API qt_status qt_report_signed(const qt_signed_graph* s, qt_report** out);
QT_API void qt_report_free(qt_report* r);
QT_API double qt_report_q(const qt_report* r);
QT_API double qt_report_lambda1(const qt_report* r);
QT_API size_t qt_report_bound_count(const qt_report* r);
QT_API qt_status qt_report_bound(const qt_report* r, size_t index, qt_bound_record* out);
QT_API qt_status qt_report_find(const qt_report* r, const char* name, qt_bound_record* out);
QT_API const char* qt_report_json(const qt_report* r);
QT_API const char* qt_report_csv(const qt_report* r);

/* ---- command runs ----------------------------------------------------- */

/* command: "verify", "conjecture", "counterexample" or "random-signed". */
QT_API qt_status qt_run_config_new(const char* command, qt_run_config** out);
QT_API void qt_run_config_free(qt_run_config* c);
QT_API qt_status qt_run_config_set_input(qt_run_config* c, const char* path);
QT_API qt_status qt_run_config_set_enumerate(qt_run_config* c, int n);
QT_API qt_status qt_run_config_set_n_min(qt_run_config* c, int n);
QT_API qt_status qt_run_config_set_n_max(qt_run_config* c, int n);
QT_API qt_status qt_run_config_set_trials(qt_run_config* c, int trials);
QT_API qt_status qt_run_config_set_seed(qt_run_config* c, uint64_t seed);
/* Comma-separated bound names; "a-alpha" selects every A_alpha bound. */
QT_API qt_status qt_run_config_set_theorems(qt_run_config* c, const char* names);
QT_API qt_status qt_run_config_set_alphas(qt_run_config* c, const double* alphas, size_t count);
QT_API qt_status qt_run_config_set_tol(qt_run_config* c, double tol);
QT_API qt_status qt_run_config_set_threads(qt_run_config* c, int threads);
QT_API qt_status qt_run_config_set_fail_fast(qt_run_config* c, int fail_fast);
QT_API qt_status qt_run_config_set_json_path(qt_run_config* c, const char* path);
QT_API qt_status qt_run_config_set_csv_path(qt_run_config* c, const char* path);

/* Validates, runs and writes any configured output files. */
QT_API qt_status qt_run(const qt_run_config* c, qt_run_summary** out);
QT_API void qt_run_summary_free(qt_run_summary* s);
QT_API int qt_run_summary_exit_code(const qt_run_summary* s);
QT_API size_t qt_run_summary_processed(const qt_run_summary* s);
QT_API size_t qt_run_summary_skipped(const qt_run_summary* s);
QT_API size_t qt_run_summary_violation_count(const qt_run_summary* s);
QT_API size_t qt_run_summary_equality_count(const qt_run_summary* s);
QT_API const char* qt_run_summary_json(const qt_run_summary* s);
QT_API const char* qt_run_summary_csv(const qt_run_summary* s);
QT_API const char* qt_run_summary_text(const qt_run_summary* s);

#ifdef __cplusplus
}
#endif

#endif /* QTURAN_QTURAN_H */

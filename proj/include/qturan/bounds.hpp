#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qturan/clique.hpp"
#include "qturan/graph.hpp"
#include "qturan/spectra.hpp"

namespace qturan {

// Bound identifiers used in reports, CSV rows and --theorem selections.
namespace bound_names {
inline constexpr std::string_view kEdgeLambda = "edge-lambda";        // lambda1^2 <= sum_e 2(1 - 1/c(e))
inline constexpr std::string_view kVertexLambda = "vertex-lambda";    // lambda1 <= sum_v (1 - 1/c(v))
inline constexpr std::string_view kCliqueQ = "clique-q";              // q <= 2n(1 - 1/omega)
inline constexpr std::string_view kVertexQ = "vertex-q";              // q <= 2 sum_v (1 - 1/c(v))
inline constexpr std::string_view kAAlphaPrefix = "a-alpha@";         // lambda1(A_alpha) <= sum_v (1 - 1/c(v))
inline constexpr std::string_view kQLower = "q-lower";                // 2 lambda1 <= q
inline constexpr std::string_view kQUpper = "q-upper";                // q <= 2 maxdeg
inline constexpr std::string_view kEdgeQConjecture = "edge-q-conjecture";
inline constexpr std::string_view kSignedClique = "signed-clique-lambda";
inline constexpr std::string_view kSignedEdge = "signed-edge-lambda";
inline constexpr std::string_view kSignedFrustration = "signed-frustration-lambda";
inline constexpr std::string_view kSignedLocalPositive = "signed-local-positive";
inline constexpr std::string_view kSignedLocalAll = "signed-local-all";
inline constexpr std::string_view kWeightedSignedQ = "weighted-signed-q";
inline constexpr std::string_view kSignedEdgeQConjecture = "signed-edge-q-conjecture";
}  // namespace bound_names

std::string a_alpha_bound_name(double alpha);

struct BoundRecord {
  std::string name;
  double value = 0.0;     // the bound (square root taken for squared bounds)
  double measured = 0.0;  // the spectral quantity it bounds
  double slack = 0.0;     // value - measured, or value^2 - measured^2 when squared
  bool equality = false;  // |slack| < equality tolerance
  bool asserted = true;   // false for open conjectures
  bool squared = false;
  bool skipped = false;   // not evaluated (size cap)
};

struct Classification {
  enum class Kind { CompleteBipartite, RegularCompleteMultipartite, CompleteMultipartiteIrregular, Other };
  Kind kind = Kind::Other;
  // Class sizes in order of their smallest vertex; empty for Other.
  std::vector<int> parts;

  bool complete_multipartite() const { return !parts.empty(); }
  bool complete_bipartite() const { return parts.size() == 2; }
  bool regular_multipartite() const;
  std::string label() const;
};

// Complete multipartite iff non-adjacency is an equivalence relation. Two
// classes label as CompleteBipartite (balanced or not).
Classification classify_equality(const Graph& g);

// The predicates the equality characterizations predict.
bool expected_vertex_q_equality(const Classification& c);      // bipartite, or regular with >= 3 classes
bool expected_vertex_lambda_equality(const Classification& c);  // regular complete multipartite

// Individual bounds. All require a connected graph (DomainError otherwise).
double bound_abreu_nikiforov(const Graph& g);
double bound_vertex_localized_q(const Graph& g);
double bound_vertex_localized_lambda(const Graph& g);
// Returned as the square root of sum_e 2(1 - 1/c(e)).
double bound_edge_localized_lambda(const Graph& g);
// 0 <= alpha <= 1/2.
double bound_a_alpha(const Graph& g, double alpha);
double conjecture_rhs(const Graph& g);

double bound_abreu_nikiforov(const Graph& g, const CliqueProfile& p);
double bound_vertex_localized_q(const Graph& g, const CliqueProfile& p);
double bound_vertex_localized_lambda(const Graph& g, const CliqueProfile& p);
double edge_localized_lambda_squared(const Graph& g, const CliqueProfile& p);
double conjecture_rhs(const Graph& g, std::span<const int> per_edge);

// Nonpositive weight -> DomainError (enforced by WeightedSignedGraph).
double bound_weighted_signed(const WeightedSignedGraph& ws);
double bound_weighted_signed(const WeightedSignedGraph& ws, const BalancedCliqueProfile& p);

struct ReportOptions {
  std::vector<double> alphas{0.0, 0.1, 0.25, 0.4, 0.5};
  double eigen_tol = kEigenTolerance;
  double equality_tol = 1e-8;
};

struct BoundReport {
  std::string graph_id;
  int n = 0;
  std::size_t m = 0;
  int omega = 0;
  std::optional<int> omega_b;
  std::optional<int> frustration;
  double lambda1 = 0.0;
  double q = 0.0;
  bool is_signed = false;
  bool degenerate = false;
  // |lambda1(M) - q/2| for the half-Q matrix; unsigned reports only.
  std::optional<double> half_q_gap;
  std::vector<int> per_vertex;  // c(v) or c_b(v)
  std::vector<int> per_edge;    // c(e) or c_b(e)
  std::vector<BoundRecord> bounds;
  Classification classification;

  const BoundRecord* find(std::string_view name) const;
};

// Unsigned report: edge/vertex lambda bounds, clique-q, vertex-q, A_alpha for
// each alpha, the q sandwich, and the (unasserted) edge-q conjecture.
BoundReport full_report(const Graph& g, const ReportOptions& options = {});
// Signed report: signed lambda bounds, the weighted signed Q bound and, for
// unit weights, the signed conjecture analogue (unasserted).
BoundReport full_report(const WeightedSignedGraph& ws, const ReportOptions& options = {});

// Switches by the signs of a leading eigenvector of A(Gamma), zero entries
// counting as +1, so the result has a nonnegative leading eigenvector.
SignedGraph switch_to_nonnegative_eigenvector(const SignedGraph& s, std::span<const double> eigenvector);

}  // namespace qturan

#pragma once

#include <span>
#include <vector>

#include "qturan/graph.hpp"

namespace qturan {

// Dense real symmetric matrix. Writes go through set(), which mirrors, so
// symmetry holds exactly.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int order) : n_(order), data_(static_cast<std::size_t>(order) * order, 0.0) {}

  int order() const noexcept { return n_; }
  double operator()(int i, int j) const noexcept { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  void set(int i, int j, double value) noexcept {
    data_[static_cast<std::size_t>(i) * n_ + j] = value;
    data_[static_cast<std::size_t>(j) * n_ + i] = value;
  }
  void add_diagonal(int i, double value) noexcept { data_[static_cast<std::size_t>(i) * n_ + i] += value; }

  std::vector<double> multiply(std::span<const double> x) const;
  double quadratic_form(std::span<const double> x) const;
  double frobenius_norm() const;
  bool nonnegative() const;

  SymMatrix& scale(double factor);

  bool operator==(const SymMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<double> data_;
};

enum class MatrixKind {
  Adjacency,
  Laplacian,
  SignlessLaplacian,
  AAlpha,
  SignedAdjacency,
  SignedLaplacian,
  SignedSignlessLaplacian,
};

SymMatrix adjacency_matrix(const Graph& g);
SymMatrix degree_matrix(const Graph& g);
SymMatrix laplacian_matrix(const Graph& g);
SymMatrix signless_laplacian_matrix(const Graph& g);
// alpha*D + (1 - alpha)*A, alpha in [0, 1].
SymMatrix a_alpha_matrix(const Graph& g, double alpha);

// Entry sigma(uv) on edges.
SymMatrix signed_adjacency_matrix(const SignedGraph& s);
// D + W(Gamma): diagonal sum_{u~v} w(u), off-diagonal sigma(uv)*sqrt(w(u)w(v)).
SymMatrix signed_signless_laplacian_matrix(const WeightedSignedGraph& ws);
// D - W(Gamma).
SymMatrix signed_laplacian_matrix(const WeightedSignedGraph& ws);

// Dispatchers. The unsigned overload accepts the first four kinds; the signed
// overload accepts the Signed* kinds and treats a SignedGraph as unit-weighted.
SymMatrix build_matrix(const Graph& g, MatrixKind kind, double alpha = 0.0);
SymMatrix build_matrix(const WeightedSignedGraph& ws, MatrixKind kind);

}  // namespace qturan

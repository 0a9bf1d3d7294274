#pragma once

#include <span>
#include <vector>

#include "qturan/graph.hpp"
#include "qturan/matrix.hpp"

namespace qturan {

inline constexpr double kEigenTolerance = 1e-12;
inline constexpr int kMaxJacobiSweeps = 100;

struct EigenDecomposition {
  // Descending.
  std::vector<double> values;
  // vectors[k] is the unit eigenvector for values[k], first nonzero entry positive.
  std::vector<std::vector<double>> vectors;
  int sweeps = 0;
  double off_diagonal = 0.0;
};

// Cyclic Jacobi. Stops once the off-diagonal Frobenius mass is below
// tol * ||m||_F; throws NumericalError after kMaxJacobiSweeps.
EigenDecomposition eigen_sym(const SymMatrix& m, double tol = kEigenTolerance);

struct SpectralSummary {
  double lambda_max = 0.0;
  std::vector<double> eigenvector;  // unit 2-norm
  double residual = 0.0;            // max |M x - lambda x|
};

SpectralSummary leading_eigenpair(const SymMatrix& m, double tol = kEigenTolerance);

// The following require a connected (underlying) graph and throw DomainError
// otherwise. Graphs on <= 1 vertex give lambda_max = 0.
SpectralSummary q_index(const Graph& g, double tol = kEigenTolerance);
SpectralSummary lambda1(const Graph& g, double tol = kEigenTolerance);
SpectralSummary lambda1_a_alpha(const Graph& g, double alpha, double tol = kEigenTolerance);
SpectralSummary lambda1_signed_adjacency(const SignedGraph& s, double tol = kEigenTolerance);
SpectralSummary q_signed(const WeightedSignedGraph& ws, double tol = kEigenTolerance);

// M_uv = (x_u + x_v) / (2 sqrt(x_u x_v)) on edges, for a positive Q-eigenvector
// x with sum 1. Its largest eigenvalue is q(G)/2.
SymMatrix half_q_matrix(const Graph& g, std::span<const double> x);

// Perron vector of Q(G) rescaled to 1-norm 1.
std::vector<double> perron_simplex_vector(const SpectralSummary& q);

}  // namespace qturan

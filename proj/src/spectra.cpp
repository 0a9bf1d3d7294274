#include "qturan/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qturan/errors.hpp"

namespace qturan {

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) acc += a[i * n + j] * a[i * n + j];
  return std::sqrt(acc);
}

void fix_sign(std::vector<double>& v) {
  for (double x : v) {
    if (std::abs(x) > 1e-12) {
      if (x < 0)
        for (double& y : v) y = -y;
      return;
    }
  }
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw DomainError("graph is not connected");
}

}  // namespace

EigenDecomposition eigen_sym(const SymMatrix& m, double tol) {
  if (!(tol > 0.0)) throw ArgumentError("eigensolver tolerance must be positive");
  const int n = m.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a[i * n + j] = m(i, j);
      if (!std::isfinite(a[i * n + j])) throw NumericalError("matrix has a non-finite entry");
    }
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const double threshold = tol * m.frobenius_norm();
  int sweeps = 0;
  double off = off_diagonal_norm(a, n);
  while (off > threshold) {
    if (sweeps == kMaxJacobiSweeps)
      throw NumericalError("Jacobi did not converge after " + std::to_string(sweeps) +
                           " sweeps (off-diagonal " + std::to_string(off) + ", threshold " +
                           std::to_string(threshold) + ", order " + std::to_string(n) + ")");
    ++sweeps;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p], aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        a[p * n + q] = a[q * n + p] = 0.0;
        for (int k = 0; k < n; ++k) {
          const double vkp = v[k * n + p], vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
    off = off_diagonal_norm(a, n);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a[i * n + i] > a[j * n + j]; });

  EigenDecomposition out;
  out.sweeps = sweeps;
  out.off_diagonal = off;
  for (int idx : order) {
    out.values.push_back(a[idx * n + idx]);
    std::vector<double> col(n);
    for (int k = 0; k < n; ++k) col[k] = v[k * n + idx];
    fix_sign(col);
    out.vectors.push_back(std::move(col));
  }
  return out;
}

SpectralSummary leading_eigenpair(const SymMatrix& m, double tol) {
  SpectralSummary s;
  if (m.order() == 0) return s;
  auto eig = eigen_sym(m, tol);
  s.lambda_max = eig.values.front();
  s.eigenvector = std::move(eig.vectors.front());
  const auto mx = m.multiply(s.eigenvector);
  for (int i = 0; i < m.order(); ++i)
    s.residual = std::max(s.residual, std::abs(mx[i] - s.lambda_max * s.eigenvector[i]));
  return s;
}

SpectralSummary q_index(const Graph& g, double tol) {
  require_connected(g);
  return leading_eigenpair(signless_laplacian_matrix(g), tol);
}

SpectralSummary lambda1(const Graph& g, double tol) {
  require_connected(g);
  return leading_eigenpair(adjacency_matrix(g), tol);
}

SpectralSummary lambda1_a_alpha(const Graph& g, double alpha, double tol) {
  require_connected(g);
  return leading_eigenpair(a_alpha_matrix(g, alpha), tol);
}

SpectralSummary lambda1_signed_adjacency(const SignedGraph& s, double tol) {
  require_connected(s.underlying());
  return leading_eigenpair(signed_adjacency_matrix(s), tol);
}

SpectralSummary q_signed(const WeightedSignedGraph& ws, double tol) {
  require_connected(ws.underlying());
  return leading_eigenpair(signed_signless_laplacian_matrix(ws), tol);
}

SymMatrix half_q_matrix(const Graph& g, std::span<const double> x) {
  require_connected(g);
  if (x.size() != static_cast<std::size_t>(g.order())) throw ArgumentError("vector length does not match graph order");
  for (double xv : x)
    if (!(xv > 0.0)) throw DomainError("half-Q matrix needs an entrywise positive vector");
  SymMatrix m(g.order());
  for (const Edge& e : g.edges()) m.set(e.u, e.v, (x[e.u] + x[e.v]) / (2.0 * std::sqrt(x[e.u] * x[e.v])));
  return m;
}

std::vector<double> perron_simplex_vector(const SpectralSummary& q) {
  std::vector<double> x = q.eigenvector;
  const double total = std::accumulate(x.begin(), x.end(), 0.0);
  for (double& v : x) v /= total;
  return x;
}

}  // namespace qturan

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "qturan/clique.hpp"
#include "qturan/graph.hpp"
#include "qturan/matrix.hpp"

namespace qturan {

// A point of the standard simplex.
struct SimplexPoint {
  std::vector<double> x;

  std::vector<int> support() const;
  // Sum within 1e-12 and all coordinates nonnegative.
  bool on_simplex(double tol = 1e-12) const;
};

SimplexPoint uniform_point(int n);
// 90% of the mass on `vertex`, the rest spread evenly.
SimplexPoint biased_point(int n, int vertex, double bias = 0.9);
// Uniform on the simplex: normalized i.i.d. exponentials.
SimplexPoint sample_simplex(int n, std::mt19937_64& rng);

struct ReplicatorOptions {
  // Starts are taken from the schedule uniform, biased(0), ..., biased(n-1);
  // any beyond n + 1 are random points drawn from `seed`.
  int restarts = 1;
  int max_iters = 100000;
  double tol = 1e-12;  // stop when max |x_{t+1} - x_t| < tol
  std::uint64_t seed = 1;
};

struct ReplicatorRun {
  double value = 0.0;
  SimplexPoint point;
  int iterations = 0;
};

struct QpResult {
  double value = 0.0;
  SimplexPoint point;
  int best_restart = 0;
};

// x_v <- x_v (Mx)_v / x^T M x from `start`. on_step sees the objective after
// every update. M must be entrywise nonnegative.
ReplicatorRun replicator_dynamics(const SymMatrix& m, SimplexPoint start, int max_iters, double tol,
                                  const std::function<void(double)>& on_step = {});

// Best replicator value over the restart schedule; a lower bound on
// max_{x in S} x^T M x.
QpResult simplex_qp_max(const SymMatrix& m, const ReplicatorOptions& options);

struct CliqueEstimate {
  int omega = 0;
  double value = 0.0;
  bool certified = false;  // matches the exact clique number
};

// Inverts value = 1 - 1/omega using n + 1 restarts. Needs at least one edge.
CliqueEstimate ms_clique_estimate(const Graph& g);

// w_uv = c(uv) / (c(uv) - 1) on edges.
SymMatrix ms_weight_matrix(const Graph& g, const CliqueProfile& profile);

struct WeightedMsCheck {
  double value = 0.0;
  bool holds = false;
  // Support induces a complete omega-partite graph whose classes each carry mass 1/omega.
  bool equality_structure = false;
};

inline constexpr double kClassMassTolerance = 1e-6;

WeightedMsCheck verify_weighted_ms(const Graph& g, const SimplexPoint& x);
WeightedMsCheck verify_weighted_ms(const Graph& g, const CliqueProfile& profile, const SymMatrix& weights,
                                   const SimplexPoint& x);

}  // namespace qturan

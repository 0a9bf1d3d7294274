#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qturan/bounds.hpp"

namespace qturan {

enum class Command { Verify, Conjecture, Counterexample, RandomSigned };

std::string command_name(Command c);
Command parse_command(const std::string& name);

struct RunConfig {
  Command command = Command::Verify;
  // Input source: a .g6 / .sg file or native enumeration (verify, conjecture).
  std::optional<std::string> input_path;
  std::optional<int> enumerate_n;
  // counterexample: 4 <= n_min <= n_max <= 50 (defaults 4..50).
  // random-signed: n_max <= 12 (default 10).
  std::optional<int> n_min;
  std::optional<int> n_max;
  int trials = 1;
  std::uint64_t seed = 42;
  // Bound names to evaluate; empty selects the command's default set.
  std::vector<std::string> theorems;
  std::vector<double> alphas{0.0, 0.1, 0.25, 0.4, 0.5};
  double tol = 1e-8;
  int threads = 1;
  bool fail_fast = false;
  std::optional<std::string> json_path;
  std::optional<std::string> csv_path;

  // Throws ArgumentError describing the first problem.
  void validate() const;
};

struct Violation {
  std::string graph;
  std::string bound;
  double slack = 0.0;
  // graph6 line or .sg text that reproduces the violation when reloaded.
  std::string certificate;
};

struct EqualityCase {
  std::string graph;
  std::string bound;
  std::string classification;
};

// An equality flag that disagrees with the predicted characterization.
struct Mismatch {
  std::string graph;
  std::string bound;
  bool equality = false;
  std::string classification;
};

struct InputError {
  std::size_t line = 0;
  std::string message;
};

struct MinSlack {
  double slack = 0.0;
  std::string graph;
};

// Conjecture scan, one row per vertex count.
struct ConjectureRow {
  int n = 0;
  std::size_t graphs = 0;
  double min_slack = 0.0;
  std::string graph;
};

// Counterexample family, one row per n.
struct FamilyRow {
  int n = 0;
  double q_signed = 0.0;
  double q_closed_form = 0.0;
  double rhs = 0.0;
  double rhs_closed_form = 0.0;
  int omega_b = 0;
  int negative_edge_cb = 0;
  bool quotient_eigenvalues_found = false;
  bool closed_form_ok = false;
  bool rhs_ok = false;
  bool strict = false;
  bool ok() const;
};

inline constexpr double kNearEqualityTolerance = 1e-6;

struct RunSummary {
  Command command = Command::Verify;
  std::size_t processed = 0;
  std::size_t skipped_disconnected = 0;
  bool aborted = false;
  std::vector<InputError> input_errors;
  std::vector<Violation> violations;
  std::vector<EqualityCase> equality_cases;
  std::vector<Mismatch> characterization_mismatches;
  // weighted-signed-q within kNearEqualityTolerance; recorded, never checked.
  std::vector<EqualityCase> near_equality;
  std::map<std::string, MinSlack> min_slack;
  std::vector<ConjectureRow> conjecture_table;
  std::vector<Violation> candidates;  // conjecture: q above the RHS
  std::vector<FamilyRow> family;
  std::vector<std::string> notes;
  std::vector<BoundReport> reports;
  double wall_seconds = 0.0;

  // 0 clean, 2 violations, 3 input error under --fail-fast.
  int exit_code() const;
  // Everything except wall time, so identical runs serialize identically.
  nlohmann::json to_json() const;
  std::string to_csv() const;
  std::string text() const;
};

RunSummary run(const RunConfig& config);
void write_outputs(const RunSummary& summary, const RunConfig& config);

}  // namespace qturan

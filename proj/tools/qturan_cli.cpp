// Command-line driver over the qturan C API.
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qturan/qturan.h"

namespace {

struct Options {
  std::string input;
  int enumerate = 0;
  std::vector<std::string> theorems;
  std::vector<double> alphas;
  int n_min = 0;
  int n_max = 0;
  int trials = 1;
  std::uint64_t seed = 42;
  double tol = 1e-8;
  int threads = 1;
  std::string json;
  std::string csv;
  bool fail_fast = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--theorem", o.theorems, "Bound names to evaluate (comma separated)")->delimiter(',');
  cmd->add_option("--tol", o.tol, "Violation and equality tolerance")->capture_default_str();
  cmd->add_option("--threads", o.threads, "Worker threads")->capture_default_str();
  cmd->add_option("--json", o.json, "Write the run summary as JSON");
  cmd->add_option("--csv", o.csv, "Write one CSV row per graph and bound");
  cmd->add_flag("--fail-fast", o.fail_fast, "Stop at the first malformed input line");
}

int report_error(qt_status st) {
  std::fprintf(stderr, "error: %s: %s\n", qt_status_string(st), qt_last_error_message());
  return (st == QT_ERROR_IO || st == QT_ERROR_PARSE) ? 3 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Localized spectral Turan bounds for the signless Laplacian"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "Check the proven bounds on every connected input graph");
  auto* conjecture = app.add_subcommand("conjecture", "Scan the edge-localized Q conjecture (reports only)");
  auto* counter = app.add_subcommand("counterexample", "Check the signed counterexample family gamma_n");
  auto* random = app.add_subcommand("random-signed", "Randomized weighted signed-graph trials");

  for (auto* cmd : {verify, conjecture}) {
    auto* in = cmd->add_option("--input", o.input, "graph6 (.g6) or signed edge-list (.sg) file");
    auto* en = cmd->add_option("--enumerate", o.enumerate, "Enumerate connected graphs on n vertices (1..7)");
    in->excludes(en);
    cmd->add_option("--alpha", o.alphas, "A_alpha values in [0, 1/2]")->delimiter(',');
    add_common(cmd, o);
  }
  counter->add_option("--n-min", o.n_min, "Smallest n (>= 4)");
  counter->add_option("--n-max", o.n_max, "Largest n (<= 50)");
  add_common(counter, o);
  random->add_option("--n-max", o.n_max, "Largest vertex count (<= 12)");
  random->add_option("--trials", o.trials, "Number of random instances")->capture_default_str();
  random->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  add_common(random, o);

  CLI11_PARSE(app, argc, argv);

  CLI::App* chosen = app.get_subcommands().front();
  qt_run_config* cfg = nullptr;
  if (qt_status st = qt_run_config_new(chosen->get_name().c_str(), &cfg); st != QT_OK) return report_error(st);

  if (!o.input.empty()) qt_run_config_set_input(cfg, o.input.c_str());
  if (chosen->get_option_no_throw("--enumerate") && chosen->count("--enumerate")) qt_run_config_set_enumerate(cfg, o.enumerate);
  if (chosen->get_option_no_throw("--n-min") && chosen->count("--n-min")) qt_run_config_set_n_min(cfg, o.n_min);
  if (chosen->get_option_no_throw("--n-max") && chosen->count("--n-max")) qt_run_config_set_n_max(cfg, o.n_max);
  qt_run_config_set_trials(cfg, o.trials);
  qt_run_config_set_seed(cfg, o.seed);
  qt_run_config_set_tol(cfg, o.tol);
  qt_run_config_set_threads(cfg, o.threads);
  qt_run_config_set_fail_fast(cfg, o.fail_fast ? 1 : 0);
  if (!o.theorems.empty()) {
    std::string joined;
    for (const auto& t : o.theorems) joined += (joined.empty() ? "" : ",") + t;
    qt_run_config_set_theorems(cfg, joined.c_str());
  }
  if (!o.alphas.empty()) qt_run_config_set_alphas(cfg, o.alphas.data(), o.alphas.size());
  if (!o.json.empty()) qt_run_config_set_json_path(cfg, o.json.c_str());
  if (!o.csv.empty()) qt_run_config_set_csv_path(cfg, o.csv.c_str());

  qt_run_summary* summary = nullptr;
  const qt_status st = qt_run(cfg, &summary);
  qt_run_config_free(cfg);
  if (st != QT_OK) return report_error(st);

  std::fputs(qt_run_summary_text(summary), stdout);
  const int code = qt_run_summary_exit_code(summary);
  qt_run_summary_free(summary);
  return code;
}

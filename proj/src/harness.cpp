#include "qturan/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <variant>

#include "qturan/enumerate.hpp"
#include "qturan/errors.hpp"
#include "qturan/formats.hpp"
#include "qturan/generators.hpp"
#include "qturan/report_io.hpp"

namespace qturan {

namespace {

constexpr std::size_t kBatchSize = 1024;
constexpr int kMaxRandomOrder = 12;
constexpr int kFamilyMin = 4;
constexpr int kFamilyMax = 50;
constexpr double kFamilyTol = 1e-8;

// Runs fn(i) for i in [0, count) on up to `threads` workers. Results are
// written by index, so output order never depends on scheduling.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  const int workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

using AnyGraph = std::variant<Graph, WeightedSignedGraph>;

struct WorkItem {
  std::string id;
  AnyGraph graph;
};

struct ItemResult {
  bool skipped = false;
  BoundReport report;
  std::vector<Violation> violations;
  std::vector<Mismatch> mismatches;
};

const Graph& underlying(const AnyGraph& g) {
  return std::holds_alternative<Graph>(g) ? std::get<Graph>(g) : std::get<WeightedSignedGraph>(g).underlying();
}

std::string certificate_of(const AnyGraph& g) {
  if (const auto* plain = std::get_if<Graph>(&g)) return write_graph6(*plain) + "\n";
  return write_sg(std::get<WeightedSignedGraph>(g));
}

bool selected(const std::vector<std::string>& theorems, const std::string& name) {
  if (theorems.empty()) return true;
  for (const auto& t : theorems) {
    if (t == name) return true;
    if (t == "a-alpha" && name.starts_with(bound_names::kAAlphaPrefix)) return true;
  }
  return false;
}

BoundReport make_report(const AnyGraph& g, const ReportOptions& opt) {
  if (const auto* plain = std::get_if<Graph>(&g)) return full_report(*plain, opt);
  return full_report(std::get<WeightedSignedGraph>(g), opt);
}

bool known_bound_name(const std::string& name) {
  using namespace bound_names;
  static constexpr std::string_view kAll[] = {kEdgeLambda,  kVertexLambda, kCliqueQ,           kVertexQ,
                                              kQLower,      kQUpper,       kEdgeQConjecture,   kSignedClique,
                                              kSignedEdge,  kSignedFrustration, kSignedLocalPositive,
                                              kSignedLocalAll, kWeightedSignedQ, kSignedEdgeQConjecture};
  if (name == "a-alpha" || name.starts_with(kAAlphaPrefix)) return true;
  return std::find(std::begin(kAll), std::end(kAll), name) != std::end(kAll);
}

std::vector<std::string> default_theorems(Command c, bool signed_input) {
  using namespace bound_names;
  if (c == Command::Conjecture)
    return {std::string(signed_input ? kSignedEdgeQConjecture : kEdgeQConjecture)};
  return {};
}

// Bound names whose equality flag the characterization predicts.
enum class Predicted { None, BipartiteOrRegular3, RegularMultipartite };

Predicted prediction_for(const std::string& name) {
  using namespace bound_names;
  if (name == kVertexQ || name == kCliqueQ || name == kEdgeLambda) return Predicted::BipartiteOrRegular3;
  if (name == kVertexLambda) return Predicted::RegularMultipartite;
  return Predicted::None;
}

class Evaluator {
 public:
  Evaluator(const RunConfig& cfg, std::vector<std::string> theorems) : cfg_(cfg), theorems_(std::move(theorems)) {
    opt_.alphas = cfg.alphas;
    opt_.equality_tol = cfg.tol;
  }

  ItemResult operator()(const WorkItem& item) const {
    ItemResult res;
    if (!is_connected(underlying(item.graph))) {
      res.skipped = true;
      return res;
    }
    res.report = make_report(item.graph, opt_);
    res.report.graph_id = item.id;
    std::erase_if(res.report.bounds, [&](const BoundRecord& b) { return !selected(theorems_, b.name); });

    bool suspicious = false;
    for (const auto& b : res.report.bounds)
      if (b.asserted && !b.skipped && b.slack < -cfg_.tol) suspicious = true;
    if (suspicious) {
      // Re-check with a tighter eigensolver before reporting anything.
      ReportOptions tight = opt_;
      tight.eigen_tol = opt_.eigen_tol / 10.0;
      const BoundReport again = make_report(item.graph, tight);
      for (const auto& b : res.report.bounds) {
        if (!b.asserted || b.skipped || b.slack >= -cfg_.tol) continue;
        const BoundRecord* r = again.find(b.name);
        if (r && r->slack < -cfg_.tol) res.violations.push_back({item.id, b.name, r->slack, certificate_of(item.graph)});
      }
    }

    if (!res.report.degenerate && !res.report.is_signed) {
      const auto& cls = res.report.classification;
      for (const auto& b : res.report.bounds) {
        const Predicted p = prediction_for(b.name);
        if (p == Predicted::None) continue;
        const bool expected = p == Predicted::BipartiteOrRegular3 ? expected_vertex_q_equality(cls)
                                                                   : expected_vertex_lambda_equality(cls);
        if (expected != b.equality) res.mismatches.push_back({item.id, b.name, b.equality, cls.label()});
      }
    }
    return res;
  }

 private:
  const RunConfig& cfg_;
  std::vector<std::string> theorems_;
  ReportOptions opt_;
};

class Collector {
 public:
  Collector(RunSummary& summary, const RunConfig& cfg) : s_(summary), cfg_(cfg) {}

  void add(ItemResult&& r) {
    if (r.skipped) {
      ++s_.skipped_disconnected;
      return;
    }
    ++s_.processed;
    const auto& rep = r.report;
    for (const auto& b : rep.bounds) {
      if (b.skipped) continue;
      if (b.equality && !rep.degenerate) s_.equality_cases.push_back({rep.graph_id, b.name, rep.classification.label()});
      if (b.name == bound_names::kWeightedSignedQ && std::abs(b.slack) < kNearEqualityTolerance)
        s_.near_equality.push_back({rep.graph_id, b.name, rep.classification.label()});
      auto it = s_.min_slack.find(b.name);
      if (it == s_.min_slack.end() || b.slack < it->second.slack) s_.min_slack[b.name] = {b.slack, rep.graph_id};
    }
    if (s_.command == Command::Conjecture) add_conjecture(rep);
    for (auto& v : r.violations) s_.violations.push_back(std::move(v));
    for (auto& m : r.mismatches) s_.characterization_mismatches.push_back(std::move(m));
    s_.reports.push_back(std::move(r.report));
  }

 private:
  void add_conjecture(const BoundReport& rep) {
    const BoundRecord* b = rep.find(bound_names::kEdgeQConjecture);
    if (!b) b = rep.find(bound_names::kSignedEdgeQConjecture);
    if (!b) return;
    auto it = std::find_if(s_.conjecture_table.begin(), s_.conjecture_table.end(),
                           [&](const ConjectureRow& row) { return row.n == rep.n; });
    if (it == s_.conjecture_table.end()) {
      s_.conjecture_table.push_back({rep.n, 0, b->slack, rep.graph_id});
      it = std::prev(s_.conjecture_table.end());
    }
    ++it->graphs;
    if (b->slack < it->min_slack) {
      it->min_slack = b->slack;
      it->graph = rep.graph_id;
    }
    if (b->slack < -cfg_.tol) s_.candidates.push_back({rep.graph_id, b->name, b->slack, ""});
  }

  RunSummary& s_;
  const RunConfig& cfg_;
};

void process_batch(std::vector<WorkItem>& batch, const Evaluator& eval, Collector& collect, int threads) {
  std::vector<ItemResult> results(batch.size());
  parallel_for(batch.size(), threads, [&](std::size_t i) { results[i] = eval(batch[i]); });
  for (auto& r : results) collect.add(std::move(r));
  batch.clear();
}

bool is_sg_path(const std::string& path) { return path.size() >= 3 && path.ends_with(".sg"); }

void run_stream(const RunConfig& cfg, RunSummary& s) {
  const bool signed_input = cfg.input_path && is_sg_path(*cfg.input_path);
  Evaluator eval(cfg, cfg.theorems.empty() ? default_theorems(cfg.command, signed_input) : cfg.theorems);
  Collector collect(s, cfg);
  std::vector<WorkItem> batch;

  if (cfg.enumerate_n) {
    for (Graph& g : enumerate_connected_graphs(*cfg.enumerate_n)) {
      std::string id = write_graph6(g);
      batch.push_back({std::move(id), std::move(g)});
    }
    process_batch(batch, eval, collect, cfg.threads);
    return;
  }

  std::ifstream in(*cfg.input_path);
  if (!in) throw IoError("cannot open input file: " + *cfg.input_path);

  if (signed_input) {
    std::vector<WeightedSignedGraph> graphs;
    try {
      graphs = parse_sg(in);
    } catch (const ParseError& e) {
      s.input_errors.push_back({e.offset(), e.what()});
      if (cfg.fail_fast) {
        s.aborted = true;
        return;
      }
    }
    for (std::size_t k = 0; k < graphs.size(); ++k)
      batch.push_back({*cfg.input_path + "#" + std::to_string(k), std::move(graphs[k])});
    process_batch(batch, eval, collect, cfg.threads);
    return;
  }

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_graph6_skippable(line)) continue;
    try {
      Graph g = parse_graph6(line);
      std::string id = write_graph6(g);
      batch.push_back({std::move(id), std::move(g)});
    } catch (const Error& e) {
      s.input_errors.push_back({line_no, e.what()});
      if (cfg.fail_fast) {
        s.aborted = true;
        break;
      }
      continue;
    }
    if (batch.size() == kBatchSize) process_batch(batch, eval, collect, cfg.threads);
  }
  process_batch(batch, eval, collect, cfg.threads);
}

bool near_some_eigenvalue(const std::vector<double>& spectrum, double value, double tol) {
  return std::any_of(spectrum.begin(), spectrum.end(), [&](double e) { return std::abs(e - value) < tol; });
}

void run_counterexample(const RunConfig& cfg, RunSummary& s) {
  const int lo = cfg.n_min.value_or(kFamilyMin), hi = cfg.n_max.value_or(kFamilyMax);
  const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
  std::vector<FamilyRow> rows(count);
  std::vector<BoundReport> reports(count);
  ReportOptions opt;
  opt.alphas.clear();
  opt.equality_tol = cfg.tol;

  parallel_for(count, cfg.threads, [&](std::size_t i) {
    const int n = lo + static_cast<int>(i);
    const SignedGraph gamma = gamma_n(n);
    FamilyRow& row = rows[i];
    row.n = n;
    row.q_signed = q_signed(WeightedSignedGraph(gamma)).lambda_max;
    const double root = std::sqrt(static_cast<double>(n) * n + 4.0 * n - 12.0);
    row.q_closed_form = (3.0 * n - 6.0 + root) / 2.0;
    row.closed_form_ok = std::abs(row.q_signed - row.q_closed_form) < kFamilyTol;

    const auto bal = balanced_clique_profile(gamma);
    row.omega_b = bal.omega_b;
    row.negative_edge_cb = bal.per_edge[*gamma.underlying().edge_index(0, 1)];
    row.rhs = conjecture_rhs(gamma.underlying(), bal.per_edge);
    row.rhs_closed_form = 2.0 * (n - 1) - 4.0 * (n - 2) / (static_cast<double>(n - 1) * (n - 1));
    row.rhs_ok = std::abs(row.rhs - row.rhs_closed_form) < kFamilyTol;
    row.strict = row.rhs < row.q_signed;

    const auto spectrum = eigen_sym(signed_adjacency_matrix(gamma)).values;
    row.quotient_eigenvalues_found = near_some_eigenvalue(spectrum, (n - 4.0 + root) / 2.0, kFamilyTol) &&
                                     near_some_eigenvalue(spectrum, (n - 4.0 - root) / 2.0, kFamilyTol);

    reports[i] = full_report(WeightedSignedGraph(gamma), opt);
    reports[i].graph_id = "gamma_n(" + std::to_string(n) + ")";
  });

  for (std::size_t i = 0; i < count; ++i) {
    ++s.processed;
    const FamilyRow& row = rows[i];
    const std::string id = reports[i].graph_id;
    auto fail = [&](const std::string& what, double slack) {
      s.violations.push_back({id, what, slack, write_sg(WeightedSignedGraph(gamma_n(row.n)))});
    };
    if (!row.closed_form_ok) fail("q-closed-form", row.q_closed_form - row.q_signed);
    if (!row.rhs_ok) fail("rhs-closed-form", row.rhs_closed_form - row.rhs);
    if (!row.strict) fail("strict-failure", row.rhs - row.q_signed);
    if (row.omega_b != row.n - 1) fail("omega-b", row.omega_b - (row.n - 1));
    if (row.negative_edge_cb != 2) fail("negative-edge-cb", row.negative_edge_cb - 2);
    if (!row.quotient_eigenvalues_found) fail("quotient-eigenvalues", 0.0);
    for (const auto& b : reports[i].bounds) {
      if (b.asserted && !b.skipped && b.slack < -cfg.tol) s.violations.push_back({id, b.name, b.slack, ""});
      if (b.skipped) continue;
      auto it = s.min_slack.find(b.name);
      if (it == s.min_slack.end() || b.slack < it->second.slack) s.min_slack[b.name] = {b.slack, id};
    }
    s.family.push_back(row);
    s.reports.push_back(std::move(reports[i]));
  }
}

void run_random_signed(const RunConfig& cfg, RunSummary& s) {
  const int n_max = cfg.n_max.value_or(10);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> pick_n(2, n_max);
  std::uniform_int_distribution<int> pick_p(0, 2);
  std::bernoulli_distribution coin(0.5);
  std::uniform_real_distribution<double> offset(0.0, 9.9);
  constexpr double kProbabilities[] = {0.3, 0.5, 0.8};

  Evaluator eval(cfg, cfg.theorems);
  Collector collect(s, cfg);
  std::vector<WorkItem> batch;
  for (int t = 0; t < cfg.trials; ++t) {
    const int n = pick_n(rng);
    const double p = kProbabilities[pick_p(rng)];
    auto g = random_connected_graph(n, p, rng);
    if (!g) {
      s.notes.push_back("trial " + std::to_string(t) + ": no connected G(" + std::to_string(n) + ", " +
                        format_double(p) + ") within the rejection cap");
      continue;
    }
    std::vector<int> signs(g->size());
    for (int& sg : signs) sg = coin(rng) ? 1 : -1;
    std::vector<double> weights(n);
    for (double& w : weights) w = 10.0 - offset(rng);  // (0.1, 10]
    batch.push_back({"random#" + std::to_string(t),
                     WeightedSignedGraph(SignedGraph(std::move(*g), std::move(signs)), std::move(weights))});
    if (batch.size() == kBatchSize) process_batch(batch, eval, collect, cfg.threads);
  }
  process_batch(batch, eval, collect, cfg.threads);
}

nlohmann::json violations_json(const std::vector<Violation>& vs) {
  auto arr = nlohmann::json::array();
  for (const auto& v : vs)
    arr.push_back({{"graph", v.graph}, {"bound", v.bound}, {"slack", v.slack}, {"certificate", v.certificate}});
  return arr;
}

}  // namespace

std::string command_name(Command c) {
  switch (c) {
    case Command::Verify:
      return "verify";
    case Command::Conjecture:
      return "conjecture";
    case Command::Counterexample:
      return "counterexample";
    case Command::RandomSigned:
      return "random-signed";
  }
  return "unknown";
}

Command parse_command(const std::string& name) {
  for (Command c : {Command::Verify, Command::Conjecture, Command::Counterexample, Command::RandomSigned})
    if (command_name(c) == name) return c;
  throw ArgumentError("unknown command: " + name);
}

void RunConfig::validate() const {
  if (!(tol > 0.0)) throw ArgumentError("tolerance must be positive");
  if (threads < 1) throw ArgumentError("worker count must be >= 1");
  for (double a : alphas)
    if (!(a >= 0.0 && a <= 0.5)) throw ArgumentError("alpha values must lie in [0, 1/2]");
  for (const auto& t : theorems)
    if (!known_bound_name(t)) throw ArgumentError("unknown bound name '" + t + "'");
  const bool has_input = input_path.has_value(), has_enum = enumerate_n.has_value();
  switch (command) {
    case Command::Verify:
    case Command::Conjecture:
      if (has_input == has_enum) throw ArgumentError("give exactly one of --input or --enumerate");
      if (has_enum && (*enumerate_n < 1 || *enumerate_n > kMaxEnumerationOrder))
        throw UnsupportedSizeError("--enumerate supports 1..7; use a graph6 file for larger n");
      if (n_min || n_max) throw ArgumentError("--n-min/--n-max do not apply to " + command_name(command));
      break;
    case Command::Counterexample: {
      if (has_input || has_enum) throw ArgumentError("counterexample takes only --n-min/--n-max");
      const int lo = n_min.value_or(kFamilyMin), hi = n_max.value_or(kFamilyMax);
      if (lo < kFamilyMin || hi > kFamilyMax || lo > hi)
        throw ArgumentError("counterexample needs 4 <= n-min <= n-max <= 50");
      break;
    }
    case Command::RandomSigned: {
      if (has_input || has_enum) throw ArgumentError("random-signed takes only --n-max/--trials/--seed");
      const int hi = n_max.value_or(10);
      if (hi < 2 || hi > kMaxRandomOrder) throw ArgumentError("random-signed needs 2 <= n-max <= 12");
      if (n_min) throw ArgumentError("--n-min does not apply to random-signed");
      if (trials < 1) throw ArgumentError("--trials must be >= 1");
      break;
    }
  }
}

bool FamilyRow::ok() const {
  return closed_form_ok && rhs_ok && strict && omega_b == n - 1 && negative_edge_cb == 2 && quotient_eigenvalues_found;
}

int RunSummary::exit_code() const {
  if (aborted) return 3;
  if (command == Command::Conjecture) return 0;
  return (violations.empty() && characterization_mismatches.empty()) ? 0 : 2;
}

nlohmann::json RunSummary::to_json() const {
  nlohmann::json j;
  j["command"] = command_name(command);
  j["processed"] = processed;
  j["skipped_disconnected"] = skipped_disconnected;
  j["aborted"] = aborted;
  j["exit_code"] = exit_code();
  auto& errs = j["input_errors"] = nlohmann::json::array();
  for (const auto& e : input_errors) errs.push_back({{"line", e.line}, {"message", e.message}});
  j["violations"] = violations_json(violations);
  auto& eq = j["equality_cases"] = nlohmann::json::array();
  for (const auto& e : equality_cases)
    eq.push_back({{"graph", e.graph}, {"bound", e.bound}, {"classification", e.classification}});
  auto& near = j["near_equality"] = nlohmann::json::array();
  for (const auto& e : near_equality)
    near.push_back({{"graph", e.graph}, {"bound", e.bound}, {"classification", e.classification}});
  auto& mm = j["characterization_mismatches"] = nlohmann::json::array();
  for (const auto& m : characterization_mismatches)
    mm.push_back({{"graph", m.graph}, {"bound", m.bound}, {"equality", m.equality}, {"classification", m.classification}});
  auto& ms = j["min_slack"] = nlohmann::json::object();
  for (const auto& [name, v] : min_slack) ms[name] = {{"slack", v.slack}, {"graph", v.graph}};
  if (command == Command::Conjecture) {
    auto& table = j["conjecture_table"] = nlohmann::json::array();
    for (const auto& r : conjecture_table)
      table.push_back({{"n", r.n}, {"graphs", r.graphs}, {"min_slack", r.min_slack}, {"graph", r.graph}});
    j["candidates"] = violations_json(candidates);
  }
  if (command == Command::Counterexample) {
    auto& fam = j["family"] = nlohmann::json::array();
    for (const auto& r : family)
      fam.push_back({{"n", r.n},
                     {"q_signed", r.q_signed},
                     {"q_closed_form", r.q_closed_form},
                     {"rhs", r.rhs},
                     {"rhs_closed_form", r.rhs_closed_form},
                     {"omega_b", r.omega_b},
                     {"negative_edge_cb", r.negative_edge_cb},
                     {"quotient_eigenvalues_found", r.quotient_eigenvalues_found},
                     {"strict", r.strict},
                     {"ok", r.ok()}});
  }
  j["notes"] = notes;
  auto& reps = j["reports"] = nlohmann::json::array();
  for (const auto& r : reports) reps.push_back(qturan::to_json(r));
  return j;
}

std::string RunSummary::to_csv() const {
  std::string out = csv_header();
  for (const auto& r : reports) out += csv_rows(r);
  return out;
}

std::string RunSummary::text() const {
  std::ostringstream os;
  os << command_name(command) << ": processed " << processed << ", skipped (disconnected) " << skipped_disconnected
     << ", input errors " << input_errors.size() << "\n";
  for (const auto& e : input_errors) os << "  input error at line " << e.line << ": " << e.message << "\n";
  os << "violations: " << violations.size() << "\n";
  for (const auto& v : violations) os << "  " << v.bound << " on " << v.graph << " slack " << format_double(v.slack) << "\n";
  if (!characterization_mismatches.empty()) {
    os << "equality/characterization mismatches: " << characterization_mismatches.size() << "\n";
    for (const auto& m : characterization_mismatches)
      os << "  " << m.bound << " on " << m.graph << " equality=" << (m.equality ? "yes" : "no") << " class "
         << m.classification << "\n";
  }
  os << "equality cases: " << equality_cases.size() << "\n";
  if (!near_equality.empty()) os << "near-equality (weighted-signed-q): " << near_equality.size() << "\n";
  for (const auto& [name, v] : min_slack) os << "  min slack " << name << " = " << format_double(v.slack) << " (" << v.graph << ")\n";
  if (command == Command::Conjecture) {
    for (const auto& r : conjecture_table)
      os << "  n=" << r.n << " graphs=" << r.graphs << " min slack " << format_double(r.min_slack) << " (" << r.graph << ")\n";
    os << "candidate counterexamples: " << candidates.size() << "\n";
  }
  if (command == Command::Counterexample) {
    for (const auto& r : family)
      os << "  n=" << r.n << " lambda1(Q)=" << format_double(r.q_signed) << " rhs=" << format_double(r.rhs)
         << (r.ok() ? " ok" : " FAILED") << "\n";
  }
  for (const auto& note : notes) os << "note: " << note << "\n";
  os << "wall time: " << wall_seconds << " s\n";
  return os.str();
}

RunSummary run(const RunConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  RunSummary s;
  s.command = config.command;
  switch (config.command) {
    case Command::Verify:
    case Command::Conjecture:
      run_stream(config, s);
      break;
    case Command::Counterexample:
      run_counterexample(config, s);
      break;
    case Command::RandomSigned:
      run_random_signed(config, s);
      break;
  }
  s.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

void write_outputs(const RunSummary& summary, const RunConfig& config) {
  if (config.json_path) {
    std::ofstream out(*config.json_path, std::ios::binary);
    if (!out) throw IoError("cannot write " + *config.json_path);
    out << summary.to_json().dump(2) << "\n";
  }
  if (config.csv_path) {
    std::ofstream out(*config.csv_path, std::ios::binary);
    if (!out) throw IoError("cannot write " + *config.csv_path);
    out << summary.to_csv();
  }
}

}  // namespace qturan

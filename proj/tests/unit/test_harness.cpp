#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qturan/bounds.hpp"
#include "qturan/errors.hpp"
#include "qturan/formats.hpp"
#include "qturan/harness.hpp"

#ifndef QTURAN_TEST_DATA
#error "QTURAN_TEST_DATA must point at tests/data"
#endif

using namespace qturan;

namespace {

std::string data(const char* name) { return std::string(QTURAN_TEST_DATA) + "/" + name; }

RunConfig enumerate(Command c, int n) {
  RunConfig cfg;
  cfg.command = c;
  cfg.enumerate_n = n;
  return cfg;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("config validation") {
  RunConfig none;
  CHECK_THROWS_AS(none.validate(), ArgumentError);
  RunConfig both = enumerate(Command::Verify, 3);
  both.input_path = "x.g6";
  CHECK_THROWS_AS(both.validate(), ArgumentError);
  RunConfig tol = enumerate(Command::Verify, 3);
  tol.tol = 0;
  CHECK_THROWS_AS(tol.validate(), ArgumentError);
  RunConfig threads = enumerate(Command::Verify, 3);
  threads.threads = 0;
  CHECK_THROWS_AS(threads.validate(), ArgumentError);
  RunConfig family;
  family.command = Command::Counterexample;
  family.n_min = 3;
  CHECK_THROWS_AS(family.validate(), ArgumentError);
  family.n_min = 10;
  family.n_max = 51;
  CHECK_THROWS_AS(family.validate(), ArgumentError);
  RunConfig random;
  random.command = Command::RandomSigned;
  random.n_max = 13;
  CHECK_THROWS_AS(random.validate(), ArgumentError);
  RunConfig unknown = enumerate(Command::Verify, 3);
  unknown.theorems = {"no-such-bound"};
  CHECK_THROWS_AS(unknown.validate(), ArgumentError);
  CHECK(parse_command("random-signed") == Command::RandomSigned);
  CHECK_THROWS_AS(parse_command("prove"), ArgumentError);
}

TEST_CASE("verify on six vertices, vertex-q only") {
  RunConfig cfg = enumerate(Command::Verify, 6);
  cfg.theorems = {std::string(bound_names::kVertexQ)};
  const RunSummary s = run(cfg);
  CHECK(s.processed == 112);
  CHECK(s.violations.empty());
  CHECK(s.characterization_mismatches.empty());
  CHECK(s.exit_code() == 0);
  // K_{1,5}, K_{2,4}, K_{3,3}, K_{2,2,2}, K_6
  std::vector<std::string> labels;
  for (const auto& e : s.equality_cases) {
    CHECK(e.bound == bound_names::kVertexQ);
    labels.push_back(e.classification);
  }
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::vector<std::string>{"CompleteBipartite", "CompleteBipartite", "CompleteBipartite",
                                           "RegularCompleteMultipartite(3)", "RegularCompleteMultipartite(6)"});
}

TEST_CASE("verify on a single vertex is degenerate") {
  const RunSummary s = run(enumerate(Command::Verify, 1));
  CHECK(s.processed == 1);
  CHECK(s.violations.empty());
  REQUIRE(s.reports.size() == 1);
  CHECK(s.reports[0].degenerate);
}

TEST_CASE("verify from a graph6 file skips disconnected graphs and reports bad lines") {
  RunConfig cfg;
  cfg.input_path = data("mixed.g6");
  const RunSummary s = run(cfg);
  CHECK(s.processed == 2);
  CHECK(s.skipped_disconnected == 1);
  REQUIRE(s.input_errors.size() == 1);
  CHECK(s.input_errors[0].line == 3);
  CHECK(s.exit_code() == 0);

  cfg.fail_fast = true;
  const RunSummary ff = run(cfg);
  CHECK(ff.aborted);
  CHECK(ff.exit_code() == 3);

  RunConfig missing;
  missing.input_path = data("does-not-exist.g6");
  CHECK_THROWS_AS(run(missing), IoError);
}

TEST_CASE("verify a signed edge-list file") {
  RunConfig cfg;
  cfg.input_path = data("signed.sg");
  const RunSummary s = run(cfg);
  CHECK(s.processed == 2);
  CHECK(s.violations.empty());
  REQUIRE(s.reports.size() == 2);
  CHECK(s.reports[0].is_signed);
}

TEST_CASE("conjecture scan") {
  RunConfig k4;
  k4.command = Command::Conjecture;
  k4.input_path = data("k4.g6");
  const RunSummary a = run(k4);
  REQUIRE(a.min_slack.count(std::string(bound_names::kEdgeQConjecture)));
  CHECK(std::abs(a.min_slack.at(std::string(bound_names::kEdgeQConjecture)).slack) < 1e-8);

  const RunSummary b = run(enumerate(Command::Conjecture, 2));
  CHECK(std::abs(b.min_slack.at(std::string(bound_names::kEdgeQConjecture)).slack) < 1e-8);
  CHECK(b.exit_code() == 0);

  const RunSummary c = run(enumerate(Command::Conjecture, 5));
  CHECK(c.candidates.empty());
  REQUIRE(c.conjecture_table.size() == 1);
  CHECK(c.conjecture_table[0].graphs == 21);
}

TEST_CASE("counterexample family") {
  RunConfig cfg;
  cfg.command = Command::Counterexample;
  cfg.n_min = 4;
  cfg.n_max = 10;
  const RunSummary s = run(cfg);
  REQUIRE(s.family.size() == 7);
  for (const auto& row : s.family) CHECK(row.ok());
  CHECK(s.family[0].q_signed == doctest::Approx(3.0 + std::sqrt(5.0)).epsilon(1e-12));
  CHECK(s.family[0].rhs == doctest::Approx(46.0 / 9).epsilon(1e-12));
  CHECK(s.family[6].q_signed == doctest::Approx((24 + std::sqrt(128.0)) / 2).epsilon(1e-12));
  CHECK(s.family[6].rhs == doctest::Approx(18 - 32.0 / 81).epsilon(1e-12));
  CHECK(s.exit_code() == 0);
}

TEST_CASE("random signed trials") {
  RunConfig cfg;
  cfg.command = Command::RandomSigned;
  cfg.n_max = 8;
  cfg.trials = 300;
  cfg.seed = 42;
  const RunSummary s = run(cfg);
  CHECK(s.processed == 300);
  CHECK(s.violations.empty());
  CHECK(s.exit_code() == 0);
}

TEST_CASE("outputs are identical across worker counts") {
  const auto dir = std::filesystem::temp_directory_path() / "qturan_harness_test";
  std::filesystem::create_directories(dir);
  for (Command c : {Command::Verify, Command::RandomSigned}) {
    std::string json[2], csv[2];
    for (int k = 0; k < 2; ++k) {
      RunConfig cfg = enumerate(c, 5);
      if (c == Command::RandomSigned) {
        cfg.enumerate_n.reset();
        cfg.trials = 200;
      }
      cfg.threads = k == 0 ? 1 : 8;
      cfg.json_path = (dir / ("out" + std::to_string(k) + ".json")).string();
      cfg.csv_path = (dir / ("out" + std::to_string(k) + ".csv")).string();
      write_outputs(run(cfg), cfg);
      json[k] = slurp(*cfg.json_path);
      csv[k] = slurp(*cfg.csv_path);
    }
    CHECK(json[0] == json[1]);
    CHECK(csv[0] == csv[1]);
    CHECK(csv[0].rfind("graph,n,m,omega,bound_name", 0) == 0);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("equality case ids reload as graph6") {
  const RunSummary s = run(enumerate(Command::Verify, 4));
  CHECK_FALSE(s.equality_cases.empty());
  for (const auto& e : s.equality_cases) CHECK_NOTHROW(parse_graph6(e.graph));
}

TEST_CASE("random signed trials on two vertices attain the weighted bound") {
  RunConfig cfg;
  cfg.command = Command::RandomSigned;
  cfg.n_max = 2;
  cfg.trials = 20;
  const RunSummary s = run(cfg);
  CHECK(s.processed == 20);
  CHECK(s.near_equality.size() == 20);
  for (const auto& r : s.reports) {
    const BoundRecord* b = r.find(bound_names::kWeightedSignedQ);
    REQUIRE(b);
    CHECK(b->equality);
  }
}

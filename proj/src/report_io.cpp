#include "qturan/report_io.hpp"

#include <charconv>

namespace qturan {

std::string format_double(double v) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json j;
  j["graph"] = r.graph_id;
  j["n"] = r.n;
  j["m"] = r.m;
  j["omega"] = r.omega;
  if (r.omega_b) j["omega_b"] = *r.omega_b;
  if (r.frustration) j["frustration"] = *r.frustration;
  j["signed"] = r.is_signed;
  j["degenerate"] = r.degenerate;
  j["lambda1"] = r.lambda1;
  j["q"] = r.q;
  if (r.half_q_gap) j["half_q_gap"] = *r.half_q_gap;
  j["classification"] = r.classification.label();
  j["parts"] = r.classification.parts;
  j["per_vertex"] = r.per_vertex;
  j["per_edge"] = r.per_edge;
  auto& bounds = j["bounds"] = nlohmann::json::array();
  for (const auto& b : r.bounds) {
    bounds.push_back({{"name", b.name},
                      {"value", b.value},
                      {"measured", b.measured},
                      {"slack", b.slack},
                      {"equality", b.equality},
                      {"asserted", b.asserted},
                      {"squared", b.squared},
                      {"skipped", b.skipped}});
  }
  return j;
}

std::string csv_header() { return "graph,n,m,omega,bound_name,bound_value,measured,slack,equality,classification\n"; }

std::string csv_rows(const BoundReport& r) {
  std::string out;
  // graph6 may contain '"'; double it for CSV quoting.
  std::string quoted;
  for (char c : r.graph_id) quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
  const std::string head = "\"" + quoted + "\"," + std::to_string(r.n) + "," + std::to_string(r.m) + "," +
                           std::to_string(r.omega) + ",";
  for (const auto& b : r.bounds) {
    out += head + b.name + "," + format_double(b.value) + "," + format_double(b.measured) + "," +
           format_double(b.slack) + "," + (b.equality ? "true" : "false") + "," + r.classification.label() + "\n";
  }
  return out;
}

}  // namespace qturan

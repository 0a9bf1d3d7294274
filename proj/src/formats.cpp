#include "qturan/formats.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "qturan/errors.hpp"

namespace qturan {

namespace {

constexpr int kGraph6Bias = 63;
constexpr int kMaxShortOrder = 62;

std::string_view strip_eol(std::string_view line) {
  if (!line.empty() && line.back() == '\n') line.remove_suffix(1);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

bool is_graph6_skippable(std::string_view line) {
  line = strip_eol(line);
  return line.empty() || line == ">>graph6<<";
}

Graph parse_graph6(std::string_view line) {
  line = strip_eol(line);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw ParseError("empty graph6 string", 0);

  const int head = static_cast<unsigned char>(line[0]);
  if (head == 126) throw ParseError("long-form graph6 (n > 62) is not supported", 0);
  if (head < kGraph6Bias || head > kGraph6Bias + kMaxShortOrder)
    throw ParseError("byte out of range in graph6 order field", 0);
  const int n = head - kGraph6Bias;

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (line.size() < 1 + body) throw ParseError("graph6 string too short for n = " + std::to_string(n), line.size());
  if (line.size() > 1 + body) throw ParseError("trailing bytes after graph6 data", 1 + body);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t offset = 1 + k / 6;
      const int byte = static_cast<unsigned char>(line[offset]) - kGraph6Bias;
      if (byte < 0 || byte > 63) throw ParseError("byte out of range in graph6 data", offset);
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  for (std::size_t offset = 1; offset < 1 + body; ++offset) {
    const int byte = static_cast<unsigned char>(line[offset]) - kGraph6Bias;
    if (byte < 0 || byte > 63) throw ParseError("byte out of range in graph6 data", offset);
  }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(line[body]) - kGraph6Bias;
    const int pad = 6 - static_cast<int>(bits % 6);
    if (last & ((1 << pad) - 1)) throw ParseError("nonzero padding bits in graph6 data", body);
  }
  return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxShortOrder) throw UnsupportedSizeError("graph6 writer supports n <= 62, got " + std::to_string(n));
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<int> chunks((bits + 5) / 6, 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.adjacent(i, j)) chunks[k / 6] |= 1 << (5 - k % 6);
  std::string out(1, static_cast<char>(kGraph6Bias + n));
  for (int c : chunks) out.push_back(static_cast<char>(kGraph6Bias + c));
  return out;
}

namespace {

struct LineCursor {
  std::istream& in;
  std::size_t line_no = 0;
  std::string line;

  // Next non-comment, non-blank line.
  bool next() {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  }
};

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
T to_number(std::string_view tok, std::size_t line_no) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("invalid number '" + std::string(tok) + "' on line " + std::to_string(line_no), line_no);
  return value;
}

}  // namespace

std::vector<WeightedSignedGraph> parse_sg(std::istream& in) {
  std::vector<WeightedSignedGraph> out;
  LineCursor cur{in, 0, {}};
  bool pending = cur.next();
  while (pending) {
    auto head = tokens(cur.line);
    if (head.size() != 2) throw ParseError("expected header 'n m' on line " + std::to_string(cur.line_no), cur.line_no);
    const int n = to_number<int>(head[0], cur.line_no);
    const long m = to_number<long>(head[1], cur.line_no);
    if (n < 0 || m < 0) throw ParseError("negative size in header", cur.line_no);

    std::vector<Edge> edges;
    std::vector<std::pair<Edge, int>> signed_edges;
    for (long k = 0; k < m; ++k) {
      if (!cur.next()) throw ParseError("unexpected end of input: expected " + std::to_string(m) + " edges", cur.line_no);
      auto t = tokens(cur.line);
      if (t.size() != 3) throw ParseError("expected 'u v s' on line " + std::to_string(cur.line_no), cur.line_no);
      Edge e{to_number<int>(t[0], cur.line_no), to_number<int>(t[1], cur.line_no)};
      const int s = to_number<int>(t[2], cur.line_no);
      if (s != 1 && s != -1) throw ParseError("edge sign must be +1 or -1 on line " + std::to_string(cur.line_no), cur.line_no);
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
        throw ParseError("vertex out of range on line " + std::to_string(cur.line_no), cur.line_no);
      if (e.u > e.v) std::swap(e.u, e.v);
      edges.push_back(e);
      signed_edges.push_back({e, s});
    }
    Graph g;
    try {
      g = Graph(n, edges);
    } catch (const ArgumentError& err) {
      throw ParseError(err.what(), cur.line_no);
    }
    std::vector<int> signs(g.size(), 1);
    for (const auto& [e, s] : signed_edges) signs[*g.edge_index(e.u, e.v)] = s;

    std::vector<double> weights(n, 1.0);
    pending = cur.next();
    while (pending) {
      auto t = tokens(cur.line);
      if (t.empty() || t[0] != "w") break;
      if (t.size() != 3) throw ParseError("expected 'w v x' on line " + std::to_string(cur.line_no), cur.line_no);
      const int v = to_number<int>(t[1], cur.line_no);
      const double x = to_number<double>(t[2], cur.line_no);
      if (v < 0 || v >= n) throw ParseError("weight vertex out of range on line " + std::to_string(cur.line_no), cur.line_no);
      if (!(x > 0.0)) throw ParseError("weight must be positive on line " + std::to_string(cur.line_no), cur.line_no);
      weights[v] = x;
      pending = cur.next();
    }
    out.emplace_back(SignedGraph(std::move(g), std::move(signs)), std::move(weights));
  }
  return out;
}

WeightedSignedGraph parse_sg_one(std::string_view text) {
  std::istringstream in{std::string(text)};
  auto all = parse_sg(in);
  if (all.size() != 1) throw ParseError("expected exactly one signed graph, found " + std::to_string(all.size()), 0);
  return std::move(all.front());
}

std::string write_sg(const WeightedSignedGraph& ws) {
  const Graph& g = ws.underlying();
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out += std::to_string(edges[i].u) + " " + std::to_string(edges[i].v) +
           (ws.signed_graph().sign_of_edge(i) > 0 ? " +1\n" : " -1\n");
  }
  if (!ws.unit_weights()) {
    for (int v = 0; v < g.order(); ++v) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "w %d %.17g\n", v, ws.weight(v));
      out += buf;
    }
  }
  return out;
}

}  // namespace qturan

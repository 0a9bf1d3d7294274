#include "qturan/enumerate.hpp"

#include <set>
#include <string>

#include "qturan/errors.hpp"

namespace qturan {

namespace {

constexpr int kMaxKeyOrder = 11;

int pair_bits(int n) { return n * (n - 1) / 2; }

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), total_(pair_bits(n_)), perm_(n_), used_(n_, false) {}

  std::uint64_t run() {
    if (n_ <= 1) return 0;
    descend(0, 0);
    return best_;
  }

 private:
  // prefix holds bits for all pairs among positions [0, k).
  void descend(int k, std::uint64_t prefix) {
    if (k == n_) {
      if (!have_best_ || prefix < best_) {
        best_ = prefix;
        have_best_ = true;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      std::uint64_t next = prefix;
      for (int i = 0; i < k; ++i) next = (next << 1) | (g_.adjacent(perm_[i], v) ? 1u : 0u);
      if (have_best_) {
        const int len = pair_bits(k + 1);
        const std::uint64_t best_prefix = best_ >> (total_ - len);
        if (next > best_prefix) continue;
      }
      perm_[k] = v;
      used_[v] = true;
      descend(k + 1, next);
      used_[v] = false;
    }
  }

  const Graph& g_;
  int n_;
  int total_;
  std::vector<int> perm_;
  std::vector<bool> used_;
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

}  // namespace

std::uint64_t adjacency_key(const Graph& g) {
  if (g.order() > kMaxKeyOrder) throw UnsupportedSizeError("adjacency keys support n <= 11");
  std::uint64_t key = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) key = (key << 1) | (g.adjacent(i, j) ? 1u : 0u);
  return key;
}

std::uint64_t canonical_key(const Graph& g) {
  if (g.order() > kMaxKeyOrder) throw UnsupportedSizeError("canonical keys support n <= 11");
  return CanonicalSearch(g).run();
}

Graph graph_from_key(int n, std::uint64_t key) {
  if (n < 0 || n > kMaxKeyOrder) throw UnsupportedSizeError("canonical keys support n <= 11");
  const int total = pair_bits(n);
  std::vector<Edge> edges;
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((key >> (total - 1 - k)) & 1u) edges.push_back({i, j});
  return Graph(n, edges);
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw UnsupportedSizeError("native enumeration supports 1 <= n <= 7 (got " + std::to_string(n) +
                               "); supply larger graphs as a graph6 file");
  const int total = pair_bits(n);
  std::vector<Graph> out;
  std::set<std::uint64_t> level{0};
  for (int m = 0; m <= total; ++m) {
    std::set<std::uint64_t> next;
    for (std::uint64_t key : level) {
      Graph g = graph_from_key(n, key);
      if (is_connected(g)) out.push_back(g);
      if (m == total) continue;
      for (int bit = 0; bit < total; ++bit) {
        if ((key >> bit) & 1u) continue;
        next.insert(canonical_key(graph_from_key(n, key | (std::uint64_t{1} << bit))));
      }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace qturan

#include "qturan/clique.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "qturan/errors.hpp"

namespace qturan {

namespace {

// Maximal cliques of the relation `adj` restricted to P ∪ X, each extended
// by the fixed prefix R.
class BronKerbosch {
 public:
  using Visit = std::function<void(const std::vector<int>&)>;

  BronKerbosch(const std::vector<VertexSet>& adj, const Visit& visit) : adj_(adj), visit_(visit) {}

  void run(std::vector<int>& r, VertexSet p, VertexSet x) {
    if (p.none()) {
      if (x.none()) {
        std::vector<int> clique(r);
        std::sort(clique.begin(), clique.end());
        visit_(clique);
      }
      return;
    }
    int pivot = -1, best = -1;
    auto consider = [&](int u) {
      const int c = p.intersection_count(adj_[u]);
      if (c > best) {
        best = c;
        pivot = u;
      }
    };
    (p | x).for_each(consider);

    const VertexSet branch = p - adj_[pivot];
    branch.for_each([&](int v) {
      r.push_back(v);
      run(r, p & adj_[v], x & adj_[v]);
      r.pop_back();
      p.reset(v);
      x.set(v);
    });
  }

 private:
  const std::vector<VertexSet>& adj_;
  const Visit& visit_;
};

std::vector<VertexSet> adjacency_rows(const Graph& g) {
  std::vector<VertexSet> rows;
  rows.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) rows.push_back(g.neighbors(v));
  return rows;
}

}  // namespace

void for_each_maximal_clique(const Graph& g, const std::function<void(const std::vector<int>&)>& visit) {
  if (g.order() == 0) return;
  const auto rows = adjacency_rows(g);
  std::vector<int> r;
  BronKerbosch(rows, visit).run(r, VertexSet::full(g.order()), VertexSet(g.order()));
}

MaxClique max_clique(const Graph& g) {
  MaxClique best;
  for_each_maximal_clique(g, [&](const std::vector<int>& c) {
    if (static_cast<int>(c.size()) > best.omega) {
      best.omega = static_cast<int>(c.size());
      best.witness = c;
    }
  });
  return best;
}

CliqueProfile clique_profile(const Graph& g) {
  CliqueProfile p;
  p.per_vertex.assign(g.order(), 1);
  p.per_edge.assign(g.size(), 2);
  if (g.order() > 0) p.omega = 1;
  if (g.order() > 0) p.witness = {0};
  for_each_maximal_clique(g, [&](const std::vector<int>& c) {
    const int k = static_cast<int>(c.size());
    if (k > p.omega) {
      p.omega = k;
      p.witness = c;
    }
    for (std::size_t a = 0; a < c.size(); ++a) {
      p.per_vertex[c[a]] = std::max(p.per_vertex[c[a]], k);
      for (std::size_t b = a + 1; b < c.size(); ++b) {
        const std::size_t e = *g.edge_index(c[a], c[b]);
        p.per_edge[e] = std::max(p.per_edge[e], k);
      }
    }
  });
  return p;
}

BalanceCertificate check_balance(const SignedGraph& s) {
  const Graph& g = s.underlying();
  const int n = g.order();
  std::vector<int> eta(n, 0), parent(n, -1), depth(n, 0);
  for (int root = 0; root < n; ++root) {
    if (eta[root] != 0) continue;
    eta[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      std::vector<int> nbrs = g.neighbors(v).members();
      for (int u : nbrs) {
        const int want = s.sign(u, v) * eta[v];
        if (eta[u] == 0) {
          eta[u] = want;
          parent[u] = v;
          depth[u] = depth[v] + 1;
          queue.push_back(u);
        } else if (eta[u] != want) {
          // Close the cycle through the BFS tree: u .. lca .. v, then edge v-u.
          std::vector<int> left{u}, right{v};
          int a = u, b = v;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              left.push_back(a);
            } else {
              b = parent[b];
              right.push_back(b);
            }
          }
          right.pop_back();
          std::reverse(right.begin(), right.end());
          left.insert(left.end(), right.begin(), right.end());
          BalanceCertificate cert;
          cert.balanced = false;
          cert.odd_cycle = std::move(left);
          return cert;
        }
      }
    }
  }
  BalanceCertificate cert;
  cert.switching = std::move(eta);
  return cert;
}

BalancedCliqueProfile balanced_clique_profile(const SignedGraph& s) {
  const Graph& g = s.underlying();
  const int n = g.order();
  BalancedCliqueProfile p;
  p.per_vertex.assign(n, 1);
  p.per_edge.assign(g.size(), 2);
  if (n == 0) return p;
  p.omega_b = 1;
  p.witness = {0};

  std::vector<std::vector<int>> sign(n, std::vector<int>(n, 0));
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    sign[edges[i].u][edges[i].v] = sign[edges[i].v][edges[i].u] = s.sign_of_edge(i);
  }

  auto record = [&](const std::vector<int>& c) {
    const int k = static_cast<int>(c.size());
    if (k > p.omega_b) {
      p.omega_b = k;
      p.witness = c;
    }
    for (std::size_t a = 0; a < c.size(); ++a) {
      p.per_vertex[c[a]] = std::max(p.per_vertex[c[a]], k);
      for (std::size_t b = a + 1; b < c.size(); ++b) {
        const std::size_t e = *g.edge_index(c[a], c[b]);
        p.per_edge[e] = std::max(p.per_edge[e], k);
      }
    }
  };

  // Fixing the smallest clique vertex `root` at eta = +1 forces eta(u) =
  // sign(root, u) on its neighbours. Two neighbours then extend the clique
  // together iff their edge agrees with that switching, i.e. the triangle with
  // root is positive. Maximal balanced cliques with smallest vertex root are
  // root + maximal cliques of this compatibility relation that are not
  // dominated by an earlier root.
  for (int root = 0; root < n; ++root) {
    const VertexSet& nbrs = g.neighbors(root);
    std::vector<VertexSet> compat(n, VertexSet(n));
    nbrs.for_each([&](int u) {
      nbrs.for_each([&](int w) {
        if (u != w && sign[u][w] != 0 && sign[u][w] * sign[root][u] * sign[root][w] == 1) compat[u].set(w);
      });
    });
    VertexSet candidates(n), excluded(n);
    nbrs.for_each([&](int u) { (u > root ? candidates : excluded).set(u); });

    // An earlier vertex outside N(root) can never join, so only neighbours
    // below root need excluding.
    std::vector<int> r{root};
    const std::function<void(const std::vector<int>&)> visit = record;
    BronKerbosch(compat, visit).run(r, candidates, excluded);
  }
  return p;
}

int frustration_index(const SignedGraph& s) {
  const Graph& g = s.underlying();
  const int n = g.order();
  if (n > kMaxFrustrationOrder)
    throw UnsupportedSizeError("frustration index supports n <= 24, got " + std::to_string(n));
  if (n <= 1 || g.size() == 0) return 0;

  std::vector<std::vector<std::pair<int, int>>> incident(n);
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incident[edges[i].u].push_back({edges[i].v, s.sign_of_edge(i)});
    incident[edges[i].v].push_back({edges[i].u, s.sign_of_edge(i)});
  }
  std::vector<int> eta(n, 1);
  long negatives = static_cast<long>(s.negative_edge_count());
  long best = negatives;
  // Gray code over vertices 1..n-1; vertex 0 stays at +1.
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t step = 1; step < limit; ++step) {
    const int v = 1 + std::countr_zero(step);
    for (const auto& [u, sg] : incident[v]) negatives += (sg * eta[u] * eta[v] > 0) ? 1 : -1;
    eta[v] = -eta[v];
    best = std::min(best, negatives);
  }
  return static_cast<int>(best);
}

}  // namespace qturan

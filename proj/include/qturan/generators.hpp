#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>

#include "qturan/graph.hpp"

namespace qturan {

// Vertices grouped into consecutive classes of the given sizes; u ~ v iff
// they lie in different classes.
Graph complete_multipartite(std::span<const int> parts);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph petersen_graph();
// Triangle {0,1,2} with pendant vertex 3 attached to 0.
Graph paw_graph();

// Signed K_n with the single negative edge {0, 1}; n >= 4.
SignedGraph gamma_n(int n);

// G(n, p) conditioned on connectivity by rejection. Returns nullopt after
// max_rejections failed draws.
std::optional<Graph> random_connected_graph(int n, double p, std::mt19937_64& rng, int max_rejections = 10000);

}  // namespace qturan

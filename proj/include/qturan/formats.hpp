#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "qturan/graph.hpp"

namespace qturan {

// graph6, short form only (n <= 62). A trailing '\n' or "\r\n" is accepted;
// anything else after the encoded bits is an error.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// True for the optional ">>graph6<<" header and blank lines.
bool is_graph6_skippable(std::string_view line);

// Signed/weighted edge list:
//   n m
//   u v s        (m lines, s in {+1, -1})
//   w v x        (optional, weight x > 0 for vertex v; default 1)
// Lines starting with '#' are comments. Several records may follow each other.
std::vector<WeightedSignedGraph> parse_sg(std::istream& in);
WeightedSignedGraph parse_sg_one(std::string_view text);
// Weights are written only when some weight differs from 1.
std::string write_sg(const WeightedSignedGraph& ws);

}  // namespace qturan

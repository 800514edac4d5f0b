#pragma once

#include <string>

#include "vmc/graph.hpp"

namespace vmc {

// graph6, short form for n <= 62 and long form (126-prefixed) above.
// Encoding follows the graph's label order; decoding labels vertices "0".."n-1".
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

// undirected DOT with vertices in label order
std::string to_dot(const Graph& g);

// plain-text adjacency list with named labels, one "v: n1 n2 ..." line per vertex
std::string to_adjacency_text(const Graph& g);
Graph from_adjacency_text(const std::string& text);

}  // namespace vmc

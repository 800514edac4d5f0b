#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vmc/graph.hpp"

namespace vmc {

// Exact isomorphism test by color-refinement plus backtracking.
// Graphs above `cap` vertices raise resource_error (configurable guard).
std::optional<std::vector<std::pair<Label, Label>>> find_isomorphism(const Graph& g,
                                                                     const Graph& h,
                                                                     int cap = 40);
bool is_isomorphic(const Graph& g, const Graph& h, int cap = 40);

// Canonical byte string: equal for isomorphic graphs, distinct otherwise.
// Refinement + twin-cell collapse + backtracking over individualizations.
std::string canonical_form(const Graph& g, int cap = 40);

// Exact key for a labeled graph (no isomorphism): labels plus adjacency bits.
std::string labeled_key(const Graph& g);

// True if h appears in g as an induced subgraph (node-induced embedding).
bool has_induced_subgraph(const Graph& g, const Graph& h);
std::optional<std::vector<std::pair<Label, Label>>> find_induced_subgraph(const Graph& g,
                                                                          const Graph& h);

}  // namespace vmc

#pragma once

#include <optional>
#include <vector>

#include "vmc/graph.hpp"
#include "vmc/trace.hpp"

namespace vmc {

struct OrbitBudget {
    long max_graphs = 200000;
    int max_vertices = 12;
};

// The result of a budgeted decision: a definite answer or an honest "ran out".
enum class Decision { False, True, Indeterminate };

struct OrbitResult {
    std::vector<Graph> members;  // one representative per isomorphism class
    bool complete = true;        // false when the budget cut enumeration short
};

// Closure of {g} under local complementation, deduplicated up to isomorphism.
OrbitResult local_equivalence_orbit(const Graph& g, const OrbitBudget& b);

struct VertexMinorResult {
    Decision decision = Decision::False;
    std::optional<Trace> trace;  // present when decision == True
};

// Ground-truth vertex-minor test: h is a vertex-minor of g iff some member of
// g's local-equivalence orbit contains h as an induced subgraph (deletions
// commute to the end of any operation word). Exact within budget.
VertexMinorResult has_vertex_minor(const Graph& g, const Graph& h, const OrbitBudget& b);

// Fixpoint of smoothing suppressible degree-2 vertices, ascending label order.
Graph smooth_to_core(const Graph& g);

struct SubdivisionResult {
    bool is_subdivision = false;
    std::vector<Label> smoothing_sequence;  // applied to h, reaches a copy of g
};

// True iff some sequence of smoothings takes h to a graph isomorphic to g
// (zero smoothings allowed). Order-insensitive for genuine subdivisions.
SubdivisionResult is_subdivision_of(const Graph& h, const Graph& g);

}  // namespace vmc

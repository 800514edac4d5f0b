#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vmc/graph.hpp"
#include "vmc/structures.hpp"
#include "vmc/trace.hpp"

namespace vmc {

// Every extractor emits a replayable Trace. Precondition violations are
// input errors naming the failing clause; search stages that legitimately
// run out below the guarantee thresholds report the stage instead.
struct ExtractResult {
    std::optional<Trace> trace;
    std::string failed_stage;  // empty on success
    bool ok() const { return trace.has_value(); }
};

// Simulates the path contraction g/{p_2..p_{m-1}}: smooth the quiet interior,
// shorten by local complementation at p_4 while m >= 7, then the final
// three-way case split. Result is isomorphic to the contraction.
Trace fan_contract(const Graph& g, const std::vector<Label>& path, const Label& q);

enum class RemovalKind { Delete, ComplementThenDelete };
// For connected h with >= 2 vertices: a choice whose application at v leaves
// a connected graph. Deletion is tried first.
RemovalKind connectivity_preserving_removal(const Graph& h, const Label& v);

// The reduce-connected lemma: from A ∪ U ∪ S (disjoint; no A-S edges; U
// independent, each with an S-neighbor; root-path condition), produce a
// vertex-minor on A ∪ U' ∪ {center} with the center complete to U' and
// detached from A, leaving G[A ∪ U'] untouched.
struct ReduceResult {
    std::vector<Label> u_prime;
    Label center;
    std::optional<Trace> trace;
    std::string failed_stage;
    bool ok() const { return trace.has_value(); }
};
ReduceResult reduce_connected(const Graph& g, const std::vector<Label>& a,
                              const std::vector<Label>& u, const std::vector<Label>& s,
                              const Label& root, int n);

// hub with >= n neighbors on an induced cycle of length >= n+3
Trace wheel_from_partial_wheel(const Graph& g, const Label& hub, int n);

// canonical-labeled structures (as produced by make); each validates first
Trace wheel_from_drum(const Graph& g, int n);            // drum of order 2n-1
Trace wheel_from_clam(const Graph& g, int n);            // clam on 3n+4; ends in W_2n or W_2n+1
Trace wheel_from_hanging_ladder(const Graph& g, int n);  // ladder on 6n+5 -> W_4n

ExtractResult wheel_from_extended_drum(const Graph& g, const StructureSpec& spec, int n);
ExtractResult wheel_from_extended_clam(const Graph& g, const StructureSpec& spec, int n);
Trace clam_from_simple_extended_clam(const Graph& g, int n);  // order 2n+1 -> clam on 3n+4
ExtractResult wheel_from_simple_ext_ladder(const Graph& g, const StructureSpec& spec, int n);
ExtractResult wheel_from_n_ext_ladder(const Graph& g, const StructureSpec& spec, int n);

// Simple (2,·)-patched cycle with attached parts T1, T2 (conditions of the
// final-configuration proposition); drives the whole extraction cascade.
struct PatchedConfig {
    PatchedCycle pc;                 // width 2, simple
    std::vector<Label> t1, t2;       // attached parts: t1 reaches patch 1, t2 patch 2
    Label root1, root2;
};
ExtractResult wheel_from_patched_config(const PatchedConfig& cfg, int n);

// -- internal chain entry points shared with the pipeline ------------------

// Extended-drum shaped configuration inside an arbitrary graph: `cycle` is the
// induced cycle in order; us[i] is attached to exactly one cycle vertex; the
// attached part ss with its root satisfies the root-path condition.
ExtractResult ext_drum_chain(TraceBuilder tb, const std::vector<Label>& cycle,
                             const std::vector<Label>& us, const std::vector<Label>& ss,
                             const Label& root, int n);

// Lemma 6.6 applied to the current graph of `tb` (hub plus induced cycle).
Trace partial_wheel_chain(TraceBuilder tb, const Label& hub, int n);

}  // namespace vmc

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vmc/graph.hpp"

namespace vmc {

enum class StructureKind {
    Drum,
    Clam,
    HangingLadder,
    ExtendedDrum,
    ExtendedClam,
    SimpleExtendedClam,
    SimpleExtendedHangingLadder,
    NExtendedHangingLadder,
};

// Attached connected part S of the extended structures. The default star is
// the smallest graph satisfying the root-path condition: one vertex "z"
// adjacent to every attachment vertex.
struct TailSpec {
    enum class Kind { Star, Custom };
    Kind kind = Kind::Star;
    // custom tails: explicit S-part with its internal edges, the attachment
    // edges into the structure's u/w vertices, and the designated root
    std::vector<Label> vertices;
    std::vector<std::pair<Label, Label>> edges;
    std::vector<std::pair<Label, Label>> attachments;  // (structure vertex, S vertex)
    Label root;
};

struct StructureSpec {
    StructureKind kind;
    int order = 0;     // n; for Clam the total vertex count (≡ 1 mod 3)
    bool h1h2 = false;  // clam only: the optional hub-hub edge
    TailSpec tail;      // extended kinds
    // n-extended hanging ladder data; q_len == 0 selects the simple variant
    int t_param = 0;
    int q_len = 0;
    std::vector<int> anchors;                  // b_1..b_{n+1}, b_{n+1} == q_len+1
    std::vector<std::vector<int>> v_q_extra;   // extra v_i ~ q_x edges inside the window
    std::vector<std::vector<int>> w_q;         // w_i ~ q_x edges (at most t-1 each)
};

struct MadeStructure {
    Graph graph;
    std::map<Label, std::string> roles;  // label -> role word (rim/spoke/hub/path/tail/...)
};

MadeStructure make(const StructureSpec& spec);
std::vector<std::string> validate(const Graph& g, const StructureSpec& spec);

std::string structure_spec_to_json(const StructureSpec& spec);
StructureSpec structure_spec_from_json(const std::string& text);
std::string kind_name(StructureKind k);
std::optional<StructureKind> kind_from_name(const std::string& name);

// (w, l)-patched cycle: induced cycle q_1..q_m, patch sets S_i of l vertices,
// anchors b_1 < ... < b_l with the staircase adjacency condition.
struct PatchedCycle {
    Graph graph;
    std::vector<Label> cycle;
    std::vector<std::vector<Label>> patches;
    std::vector<int> anchors;  // 1-based positions into `cycle`
};

std::vector<std::string> validate_patched_cycle(const PatchedCycle& pc, bool require_simple);
bool patched_cycle_is_simple(const PatchedCycle& pc);

// Builds the canonical instance plus caller-supplied extra edges; edges that
// would violate the patched-cycle invariants are input errors naming the pair.
PatchedCycle make_patched_cycle(int w, int l, int m, const std::vector<int>& anchors,
                                const std::vector<std::pair<Label, Label>>& extra_edges);

struct Leveling {
    std::vector<std::vector<Label>> levels;  // L_0 .. L_m
};

Leveling bfs_leveling(const Graph& g, const Label& root);
std::vector<std::string> validate_leveling(const Graph& g, const Leveling& lv);

}  // namespace vmc

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vmc/bitset.hpp"
#include "vmc/errors.hpp"

namespace vmc {

using Label = std::string;

// Label ordering used everywhere: by length, then lexicographic, so "v2" < "v10".
inline bool label_less(const Label& a, const Label& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// Immutable simple undirected graph with stable string labels.
// Vertices are kept sorted by label_less; adjacency is a symmetric,
// irreflexive bitset matrix indexed by sorted position.
class Graph {
public:
    Graph() = default;

    static Graph from_vertices(std::vector<Label> vertices);
    static Graph from_edges(std::vector<Label> vertices,
                            const std::vector<std::pair<Label, Label>>& edges);

    int size() const { return (int)labels_.size(); }
    long edge_count() const;
    const std::vector<Label>& labels() const { return labels_; }

    bool has_vertex(const Label& v) const { return find(v) >= 0; }
    bool adjacent(const Label& u, const Label& v) const;
    int degree(const Label& v) const { return adj_[at(v)].count(); }
    std::vector<Label> neighbors(const Label& v) const;
    std::vector<std::pair<Label, Label>> edges() const;

    // elementary vertex-minor operations (pure; each returns a new graph)
    Graph local_complement(const Label& v) const;
    Graph pivot(const Label& u, const Label& v) const;        // flip rule + label swap
    Graph pivot_by_lc(const Label& u, const Label& v) const;  // literally g*u*v*u
    Graph smooth(const Label& v) const;
    Graph removed(const std::vector<Label>& s) const;
    Graph induced(const std::vector<Label>& s) const;
    Graph contract_connected(const std::vector<Label>& s) const;

    // edge edits used by builders and tests
    Graph with_edge(const Label& u, const Label& v) const;
    Graph without_edge(const Label& u, const Label& v) const;
    Graph with_vertex(const Label& v) const;

    // index-level access for algorithm kernels
    int index_of(const Label& v) const { return at(v); }
    const Label& label_at(int i) const { return labels_[i]; }
    const Bitset& row(int i) const { return adj_[i]; }
    bool adj(int i, int j) const { return adj_[i].test(j); }
    int deg(int i) const { return adj_[i].count(); }

    bool is_connected() const;
    std::vector<std::vector<int>> components() const;  // index sets
    std::vector<int> bfs_distances(int src) const;     // -1 when unreachable
    std::vector<Label> neighbors_of_set(const std::vector<Label>& s) const;

    // true when the label sequence forms an induced cycle (length >= 3)
    bool is_induced_cycle(const std::vector<Label>& cyc) const;
    bool is_induced_path(const std::vector<Label>& path) const;

    // degree-2 vertex whose two neighbors are non-adjacent
    bool suppressible(const Label& v) const;

    bool operator==(const Graph& o) const { return labels_ == o.labels_ && adj_ == o.adj_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    int find(const Label& v) const;  // -1 if absent
    int at(const Label& v) const;    // throws input_error if absent

    std::vector<Label> labels_;
    std::vector<Bitset> adj_;

    friend class GraphBuilder;
};

// Mutable construction helper; packs into an immutable Graph.
class GraphBuilder {
public:
    void add_vertex(const Label& v);
    void add_edge(const Label& u, const Label& v);  // adds endpoints as needed
    Graph build() const;

private:
    std::vector<Label> verts_;
    std::vector<std::pair<Label, Label>> edges_;
};

// common small graphs, labeled "1".."n" (+ "h" hub for wheels)
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph wheel_graph(int n);  // W_n: induced n-cycle "1".."n" plus hub "h"

}  // namespace vmc

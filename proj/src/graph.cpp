#include "vmc/graph.hpp"

#include <algorithm>
#include <numeric>

namespace vmc {

int Graph::find(const Label& v) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v, label_less);
    if (it == labels_.end() || *it != v) return -1;
    return (int)(it - labels_.begin());
}

int Graph::at(const Label& v) const {
    int i = find(v);
    if (i < 0) throw input_error("unknown vertex: " + v);
    return i;
}

Graph Graph::from_vertices(std::vector<Label> vertices) {
    std::sort(vertices.begin(), vertices.end(), label_less);
    for (size_t i = 1; i < vertices.size(); ++i)
        if (vertices[i] == vertices[i - 1]) throw input_error("duplicate vertex: " + vertices[i]);
    Graph g;
    g.labels_ = std::move(vertices);
    g.adj_.assign(g.labels_.size(), Bitset((int)g.labels_.size()));
    return g;
}

Graph Graph::from_edges(std::vector<Label> vertices,
                        const std::vector<std::pair<Label, Label>>& edges) {
    Graph g = from_vertices(std::move(vertices));
    for (const auto& [u, v] : edges) {
        int i = g.at(u), j = g.at(v);
        if (i == j) throw input_error("self-loop at " + u);
        g.adj_[i].set(j);
        g.adj_[j].set(i);
    }
    return g;
}

long Graph::edge_count() const {
    long twice = 0;
    for (const auto& r : adj_) twice += r.count();
    return twice / 2;
}

bool Graph::adjacent(const Label& u, const Label& v) const { return adj_[at(u)].test(at(v)); }

std::vector<Label> Graph::neighbors(const Label& v) const {
    std::vector<Label> out;
    adj_[at(v)].for_each([&](int j) { out.push_back(labels_[j]); });
    return out;
}

std::vector<std::pair<Label, Label>> Graph::edges() const {
    std::vector<std::pair<Label, Label>> out;
    for (int i = 0; i < size(); ++i)
        for (int j = adj_[i].next(i + 1); j >= 0; j = adj_[i].next(j + 1))
            out.emplace_back(labels_[i], labels_[j]);
    return out;
}

Graph Graph::local_complement(const Label& v) const {
    int c = at(v);
    Graph g = *this;
    auto nb = adj_[c].to_vector();
    for (size_t a = 0; a < nb.size(); ++a)
        for (size_t b = a + 1; b < nb.size(); ++b) {
            g.adj_[nb[a]].flip(nb[b]);
            g.adj_[nb[b]].flip(nb[a]);
        }
    return g;
}

Graph Graph::pivot(const Label& u, const Label& v) const {
    int iu = at(u), iv = at(v);
    if (!adj_[iu].test(iv)) throw input_error("pivot requires an edge: " + u + "-" + v);
    Graph g = *this;
    Bitset X = adj_[iu], Y = adj_[iv], Z = adj_[iu];
    Z &= adj_[iv];
    X.andnot(adj_[iv]);
    X.reset(iv);
    Y.andnot(adj_[iu]);
    Y.reset(iu);
    auto flip_across = [&](const Bitset& A, const Bitset& B) {
        A.for_each([&](int a) {
            B.for_each([&](int b) {
                g.adj_[a].flip(b);
                g.adj_[b].flip(a);
            });
        });
    };
    flip_across(X, Y);
    flip_across(X, Z);
    flip_across(Y, Z);
    // swap the labels of u and v: with sorted labels this is a row/column swap
    for (auto& r : g.adj_) {
        bool bu = r.test(iu), bv = r.test(iv);
        if (bu != bv) {
            r.flip(iu);
            r.flip(iv);
        }
    }
    std::swap(g.adj_[iu], g.adj_[iv]);
    return g;
}

Graph Graph::pivot_by_lc(const Label& u, const Label& v) const {
    if (!adjacent(u, v)) throw input_error("pivot requires an edge: " + u + "-" + v);
    return local_complement(u).local_complement(v).local_complement(u);
}

Graph Graph::smooth(const Label& v) const {
    int c = at(v);
    auto nb = adj_[c].to_vector();
    if (nb.size() != 2) throw input_error("smooth: " + v + " does not have degree 2");
    if (adj_[nb[0]].test(nb[1]))
        throw input_error("smooth: neighbors of " + v + " are adjacent");
    Graph g = local_complement(v);
    return g.removed({v});
}

Graph Graph::removed(const std::vector<Label>& s) const {
    Bitset drop(size());
    for (const auto& v : s) drop.set(at(v));
    std::vector<Label> keep;
    keep.reserve(size());
    for (int i = 0; i < size(); ++i)
        if (!drop.test(i)) keep.push_back(labels_[i]);
    return induced(keep);
}

Graph Graph::induced(const std::vector<Label>& s) const {
    std::vector<int> old_idx;
    old_idx.reserve(s.size());
    for (const auto& v : s) old_idx.push_back(at(v));
    std::sort(old_idx.begin(), old_idx.end());
    old_idx.erase(std::unique(old_idx.begin(), old_idx.end()), old_idx.end());
    Graph g;
    g.labels_.reserve(old_idx.size());
    for (int i : old_idx) g.labels_.push_back(labels_[i]);
    g.adj_.assign(old_idx.size(), Bitset((int)old_idx.size()));
    for (size_t a = 0; a < old_idx.size(); ++a)
        for (size_t b = a + 1; b < old_idx.size(); ++b)
            if (adj_[old_idx[a]].test(old_idx[b])) {
                g.adj_[a].set((int)b);
                g.adj_[b].set((int)a);
            }
    return g;
}

Graph Graph::contract_connected(const std::vector<Label>& s) const {
    if (s.empty()) throw input_error("contract: empty set");
    Graph sub = induced(s);
    if ((int)sub.size() != (int)s.size() && (int)sub.size() != (int)s.size())
        throw input_error("contract: duplicate vertices");
    if (!sub.is_connected()) throw input_error("contract: set does not induce a connected subgraph");
    // the contracted vertex takes the least label of the set
    Label keep = s[0];
    for (const auto& v : s)
        if (label_less(v, keep)) keep = v;
    auto nbrs = neighbors_of_set(s);
    std::vector<Label> gone;
    for (const auto& v : s)
        if (v != keep) gone.push_back(v);
    Graph g = removed(gone);
    int k = g.at(keep);
    for (const auto& x : nbrs) {
        int j = g.at(x);
        g.adj_[k].set(j);
        g.adj_[j].set(k);
    }
    return g;
}

Graph Graph::with_edge(const Label& u, const Label& v) const {
    Graph g = *this;
    int i = g.at(u), j = g.at(v);
    if (i == j) throw input_error("self-loop at " + u);
    g.adj_[i].set(j);
    g.adj_[j].set(i);
    return g;
}

Graph Graph::without_edge(const Label& u, const Label& v) const {
    Graph g = *this;
    int i = g.at(u), j = g.at(v);
    g.adj_[i].reset(j);
    g.adj_[j].reset(i);
    return g;
}

Graph Graph::with_vertex(const Label& v) const {
    if (has_vertex(v)) throw input_error("duplicate vertex: " + v);
    std::vector<Label> verts = labels_;
    verts.push_back(v);
    Graph g = from_vertices(std::move(verts));
    for (const auto& [a, b] : edges()) {
        int i = g.at(a), j = g.at(b);
        g.adj_[i].set(j);
        g.adj_[j].set(i);
    }
    return g;
}

bool Graph::is_connected() const {
    if (size() == 0) return true;
    return (int)components().size() == 1;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(size(), 0);
    for (int s = 0; s < size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            adj_[u].for_each([&](int w) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<int> Graph::bfs_distances(int src) const {
    std::vector<int> dist(size(), -1);
    dist[src] = 0;
    std::vector<int> cur{src};
    int d = 0;
    while (!cur.empty()) {
        std::vector<int> nxt;
        for (int u : cur)
            adj_[u].for_each([&](int w) {
                if (dist[w] < 0) {
                    dist[w] = d + 1;
                    nxt.push_back(w);
                }
            });
        cur = std::move(nxt);
        ++d;
    }
    return dist;
}

std::vector<Label> Graph::neighbors_of_set(const std::vector<Label>& s) const {
    Bitset in(size()), nb(size());
    for (const auto& v : s) in.set(at(v));
    in.for_each([&](int i) { nb |= adj_[i]; });
    nb.andnot(in);
    std::vector<Label> out;
    nb.for_each([&](int i) { out.push_back(labels_[i]); });
    return out;
}

bool Graph::is_induced_cycle(const std::vector<Label>& cyc) const {
    size_t m = cyc.size();
    if (m < 3) return false;
    std::vector<int> idx;
    for (const auto& v : cyc) {
        int i = find(v);
        if (i < 0) return false;
        idx.push_back(i);
    }
    for (size_t a = 0; a < m; ++a)
        for (size_t b = a + 1; b < m; ++b) {
            if (idx[a] == idx[b]) return false;
            bool consec = (b == a + 1) || (a == 0 && b == m - 1);
            if (adj_[idx[a]].test(idx[b]) != consec) return false;
        }
    return true;
}

bool Graph::is_induced_path(const std::vector<Label>& path) const {
    size_t m = path.size();
    if (m == 0) return false;
    std::vector<int> idx;
    for (const auto& v : path) {
        int i = find(v);
        if (i < 0) return false;
        idx.push_back(i);
    }
    for (size_t a = 0; a < m; ++a)
        for (size_t b = a + 1; b < m; ++b) {
            if (idx[a] == idx[b]) return false;
            if (adj_[idx[a]].test(idx[b]) != (b == a + 1)) return false;
        }
    return true;
}

bool Graph::suppressible(const Label& v) const {
    int c = at(v);
    auto nb = adj_[c].to_vector();
    return nb.size() == 2 && !adj_[nb[0]].test(nb[1]);
}

void GraphBuilder::add_vertex(const Label& v) {
    verts_.push_back(v);
}

void GraphBuilder::add_edge(const Label& u, const Label& v) {
    verts_.push_back(u);
    verts_.push_back(v);
    edges_.emplace_back(u, v);
}

Graph GraphBuilder::build() const {
    std::vector<Label> vs = verts_;
    std::sort(vs.begin(), vs.end(), label_less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return Graph::from_edges(std::move(vs), edges_);
}

static std::vector<Label> numbered(int n) {
    std::vector<Label> v;
    v.reserve(n);
    for (int i = 1; i <= n; ++i) v.push_back(std::to_string(i));
    return v;
}

Graph path_graph(int n) {
    GraphBuilder b;
    for (const auto& v : numbered(n)) b.add_vertex(v);
    for (int i = 1; i < n; ++i) b.add_edge(std::to_string(i), std::to_string(i + 1));
    return b.build();
}

Graph cycle_graph(int n) {
    if (n < 3) throw input_error("cycle needs >= 3 vertices");
    GraphBuilder b;
    for (int i = 1; i <= n; ++i) b.add_edge(std::to_string(i), std::to_string(i % n + 1));
    return b.build();
}

Graph complete_graph(int n) {
    GraphBuilder b;
    for (const auto& v : numbered(n)) b.add_vertex(v);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) b.add_edge(std::to_string(i), std::to_string(j));
    return b.build();
}

Graph wheel_graph(int n) {
    if (n < 3) throw input_error("wheel W_n needs n >= 3");
    GraphBuilder b;
    for (int i = 1; i <= n; ++i) {
        b.add_edge(std::to_string(i), std::to_string(i % n + 1));
        b.add_edge("h", std::to_string(i));
    }
    return b.build();
}

}  // namespace vmc

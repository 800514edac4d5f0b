#include "vmc/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "vmc/isomorphism.hpp"

namespace vmc {

OrbitResult local_equivalence_orbit(const Graph& g, const OrbitBudget& b) {
    if (g.size() > b.max_vertices)
        throw resource_error("orbit: graph exceeds max_vertices budget");
    OrbitResult out;
    std::set<std::string> seen;
    std::deque<Graph> frontier;
    seen.insert(canonical_form(g));
    out.members.push_back(g);
    frontier.push_back(g);
    while (!frontier.empty()) {
        Graph cur = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& v : cur.labels()) {
            if (cur.degree(v) < 2) continue;  // lc at degree <= 1 is the identity
            Graph nxt = cur.local_complement(v);
            std::string key = canonical_form(nxt);
            if (seen.count(key)) continue;
            if ((long)seen.size() >= b.max_graphs) {
                out.complete = false;
                return out;
            }
            seen.insert(std::move(key));
            out.members.push_back(nxt);
            frontier.push_back(std::move(nxt));
        }
    }
    return out;
}

namespace {

struct SearchNode {
    Graph g;
    int parent;   // index into nodes, -1 for root
    Label moved;  // lc vertex leading here
};

}  // namespace

VertexMinorResult has_vertex_minor(const Graph& g, const Graph& h, const OrbitBudget& b) {
    if (g.size() > b.max_vertices || h.size() > b.max_vertices)
        throw resource_error("has_vertex_minor: graph exceeds max_vertices budget");
    VertexMinorResult out;
    if (h.size() > g.size()) {
        out.decision = Decision::False;
        return out;
    }
    std::vector<SearchNode> nodes;
    std::set<std::string> seen;
    nodes.push_back({g, -1, ""});
    seen.insert(canonical_form(g));
    bool truncated = false;
    for (size_t at = 0; at < nodes.size(); ++at) {
        Graph cur = nodes[at].g;  // copy: nodes may reallocate below
        if (auto emb = find_induced_subgraph(cur, h)) {
            // recover the lc word, then delete down to the embedded copy
            std::vector<TraceStep> steps;
            {
                std::vector<Label> word;
                for (int i = (int)at; nodes[i].parent >= 0; i = nodes[i].parent)
                    word.push_back(nodes[i].moved);
                std::reverse(word.begin(), word.end());
                for (auto& v : word) steps.push_back(TraceStep::lc(std::move(v)));
            }
            std::set<Label> image;
            for (const auto& [hv, gv] : *emb) image.insert(gv);
            std::vector<Label> gone;
            for (const auto& v : cur.labels())
                if (!image.count(v)) gone.push_back(v);
            if (!gone.empty()) steps.push_back(TraceStep::del(gone));
            Trace t{g, steps, cur.induced(std::vector<Label>(image.begin(), image.end()))};
            out.decision = Decision::True;
            out.trace = std::move(t);
            return out;
        }
        for (const auto& v : cur.labels()) {
            if (cur.degree(v) < 2) continue;
            Graph nxt = cur.local_complement(v);
            std::string key = canonical_form(nxt);
            if (seen.count(key)) continue;
            if ((long)seen.size() >= b.max_graphs) {
                truncated = true;
                break;
            }
            seen.insert(std::move(key));
            nodes.push_back({std::move(nxt), (int)at, v});
        }
        if (truncated) break;
    }
    out.decision = truncated ? Decision::Indeterminate : Decision::False;
    return out;
}

Graph smooth_to_core(const Graph& g) {
    Graph cur = g;
    bool again = true;
    while (again) {
        again = false;
        for (const auto& v : cur.labels()) {
            if (cur.suppressible(v)) {
                cur = cur.smooth(v);
                again = true;
                break;
            }
        }
    }
    return cur;
}

namespace {

bool subdivision_rec(const Graph& h, const Graph& g, std::set<std::string>& memo,
                     std::vector<Label>& seq) {
    if (h.size() == g.size()) return is_isomorphic(h, g);
    if (h.size() < g.size()) return false;
    // smoothing preserves |E| - |V|
    if (h.edge_count() - h.size() != g.edge_count() - g.size()) return false;
    std::string key = labeled_key(h);
    if (memo.count(key)) return false;
    memo.insert(std::move(key));
    for (const auto& v : h.labels()) {
        if (!h.suppressible(v)) continue;
        seq.push_back(v);
        if (subdivision_rec(h.smooth(v), g, memo, seq)) return true;
        seq.pop_back();
    }
    return false;
}

}  // namespace

SubdivisionResult is_subdivision_of(const Graph& h, const Graph& g) {
    SubdivisionResult out;
    std::set<std::string> memo;
    std::vector<Label> seq;
    if (subdivision_rec(h, g, memo, seq)) {
        out.is_subdivision = true;
        out.smoothing_sequence = std::move(seq);
    }
    return out;
}

}  // namespace vmc

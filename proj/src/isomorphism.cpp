#include "vmc/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace vmc {

namespace {

// stable 1-WL refinement of an initial coloring; returns color per vertex
std::vector<int> refine(const Graph& g, std::vector<int> col) {
    const int n = g.size();
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.push_back(col[v]);
            std::vector<int> nc;
            g.row(v).for_each([&](int w) { nc.push_back(col[w]); });
            std::sort(nc.begin(), nc.end());
            s.insert(s.end(), nc.begin(), nc.end());
            sig[v] = {std::move(s), v};
        }
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return sig[a].first < sig[b].first; });
        std::vector<int> ncol(n);
        int c = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]].first != sig[order[i - 1]].first) ++c;
            ncol[order[i]] = c;
        }
        if (ncol == col) return col;
        col = std::move(ncol);
    }
}

std::vector<int> degree_coloring(const Graph& g) {
    std::vector<int> deg(g.size());
    for (int v = 0; v < g.size(); ++v) deg[v] = g.deg(v);
    std::vector<int> uniq = deg;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> col(g.size());
    for (int v = 0; v < g.size(); ++v)
        col[v] = (int)(std::lower_bound(uniq.begin(), uniq.end(), deg[v]) - uniq.begin());
    return col;
}

std::vector<std::vector<int>> cells_of(const std::vector<int>& col) {
    int c = col.empty() ? 0 : *std::max_element(col.begin(), col.end()) + 1;
    std::vector<std::vector<int>> cells(c);
    for (int v = 0; v < (int)col.size(); ++v) cells[col[v]].push_back(v);
    return cells;
}

// all members mutually twins: same neighborhood outside the cell, and the
// cell induces a clique or an independent set
bool twin_cell(const Graph& g, const std::vector<int>& cell) {
    if (cell.size() < 2) return true;
    Bitset mask(g.size());
    for (int v : cell) mask.set(v);
    bool e01 = g.adj(cell[0], cell[1]);
    Bitset out0 = g.row(cell[0]);
    out0.andnot(mask);
    for (size_t i = 0; i < cell.size(); ++i) {
        Bitset oi = g.row(cell[i]);
        oi.andnot(mask);
        if (!(oi == out0)) return false;
        for (size_t j = i + 1; j < cell.size(); ++j)
            if (g.adj(cell[i], cell[j]) != e01) return false;
    }
    return true;
}

std::string code_for(const Graph& g, const std::vector<int>& pos) {
    // pos[v] = position of vertex v in the ordering; upper triangle, column-major
    const int n = g.size();
    std::vector<int> vert(n);
    for (int v = 0; v < n; ++v) vert[pos[v]] = v;
    std::string code;
    code.reserve(n * n / 8 + 2);
    unsigned char cur = 0;
    int nb = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            cur = (unsigned char)((cur << 1) | (g.adj(vert[i], vert[j]) ? 1 : 0));
            if (++nb == 8) {
                code.push_back((char)cur);
                cur = 0;
                nb = 0;
            }
        }
    if (nb) code.push_back((char)(cur << (8 - nb)));
    return code;
}

struct CanonState {
    const Graph* g;
    std::string best;
    bool have = false;
};

void canon_rec(CanonState& st, std::vector<int> col) {
    const Graph& g = *st.g;
    col = refine(g, col);
    auto cells = cells_of(col);
    // find first smallest non-singleton cell
    int target = -1;
    for (int i = 0; i < (int)cells.size(); ++i) {
        if (cells[i].size() < 2) continue;
        if (target < 0 || cells[i].size() < cells[target].size()) target = i;
    }
    if (target < 0) {
        std::string code = code_for(g, col);
        if (!st.have || code > st.best) {
            st.best = std::move(code);
            st.have = true;
        }
        return;
    }
    const auto& cell = cells[target];
    std::vector<int> branch = twin_cell(g, cell) ? std::vector<int>{cell[0]} : cell;
    for (int v : branch) {
        std::vector<int> c2(col.size());
        // individualize v: give it a color just below the rest of its cell
        for (size_t i = 0; i < col.size(); ++i)
            c2[i] = 2 * col[i] + ((int)i == v ? 0 : 1);
        canon_rec(st, std::move(c2));
    }
}

}  // namespace

std::string canonical_form(const Graph& g, int cap) {
    if (g.size() > cap) throw resource_error("canonical_form: graph exceeds cap");
    CanonState st{&g, {}, false};
    canon_rec(st, degree_coloring(g));
    std::string out;
    out.push_back((char)(g.size() & 0xff));
    out.push_back((char)((g.size() >> 8) & 0xff));
    out += st.best;
    return out;
}

std::string labeled_key(const Graph& g) {
    std::string out;
    for (const auto& l : g.labels()) {
        out += l;
        out.push_back('\0');
    }
    out.push_back('\1');
    const int n = g.size();
    unsigned char cur = 0;
    int nb = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            cur = (unsigned char)((cur << 1) | (g.adj(i, j) ? 1 : 0));
            if (++nb == 8) {
                out.push_back((char)cur);
                cur = 0;
                nb = 0;
            }
        }
    if (nb) out.push_back((char)(cur << (8 - nb)));
    return out;
}

std::optional<std::vector<std::pair<Label, Label>>> find_isomorphism(const Graph& g,
                                                                     const Graph& h, int cap) {
    if (g.size() > cap || h.size() > cap) throw resource_error("isomorphism: graph exceeds cap");
    const int n = g.size();
    if (n != h.size() || g.edge_count() != h.edge_count()) return std::nullopt;

    auto cg = refine(g, degree_coloring(g));
    auto ch = refine(h, degree_coloring(h));
    {
        auto sg = cg, sh = ch;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) return std::nullopt;
        // colors are rank-normalized the same way only if signatures match; the
        // sorted check above is a necessary condition, the backtracking is exact
    }
    auto cells_h = cells_of(ch);
    if ((int)cells_h.size() != (cg.empty() ? 0 : *std::max_element(cg.begin(), cg.end()) + 1))
        return std::nullopt;

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (cells_h[cg[a]].size() != cells_h[cg[b]].size())
            return cells_h[cg[a]].size() < cells_h[cg[b]].size();
        return a < b;
    });

    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> dfs = [&](int k) -> bool {
        if (k == n) return true;
        int v = order[k];
        for (int w : cells_h[cg[v]]) {
            if (used[w] || g.deg(v) != h.deg(w)) continue;
            bool ok = true;
            for (int j = 0; j < k && ok; ++j) {
                int u = order[j];
                if (g.adj(v, u) != h.adj(w, map[u])) ok = false;
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (dfs(k + 1)) return true;
            used[w] = 0;
            map[v] = -1;
        }
        return false;
    };
    if (!dfs(0)) return std::nullopt;
    std::vector<std::pair<Label, Label>> out;
    for (int v = 0; v < n; ++v) out.emplace_back(g.label_at(v), h.label_at(map[v]));
    return out;
}

bool is_isomorphic(const Graph& g, const Graph& h, int cap) {
    return find_isomorphism(g, h, cap).has_value();
}

std::optional<std::vector<std::pair<Label, Label>>> find_induced_subgraph(const Graph& g,
                                                                          const Graph& h) {
    const int n = g.size(), k = h.size();
    if (k > n) return std::nullopt;
    // map h-vertices (highest degree first) into g with induced consistency
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (h.deg(a) != h.deg(b)) return h.deg(a) > h.deg(b);
        return a < b;
    });
    std::vector<int> map(k, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> dfs = [&](int idx) -> bool {
        if (idx == k) return true;
        int v = order[idx];
        for (int w = 0; w < n; ++w) {
            if (used[w] || g.deg(w) < h.deg(v)) continue;
            bool ok = true;
            for (int j = 0; j < idx && ok; ++j) {
                int u = order[j];
                if (h.adj(v, u) != g.adj(w, map[u])) ok = false;
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (dfs(idx + 1)) return true;
            used[w] = 0;
            map[v] = -1;
        }
        return false;
    };
    if (!dfs(0)) return std::nullopt;
    std::vector<std::pair<Label, Label>> out;
    for (int v = 0; v < k; ++v) out.emplace_back(h.label_at(v), g.label_at(map[v]));
    return out;
}

bool has_induced_subgraph(const Graph& g, const Graph& h) {
    return find_induced_subgraph(g, h).has_value();
}

}  // namespace vmc

#include "vmc/extract.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>

#include "vmc/isomorphism.hpp"
#include "vmc/oracle.hpp"
#include "vmc/ramsey.hpp"

namespace vmc {

namespace {

Label lab(const char* p, int i) { return std::string(p) + std::to_string(i); }

std::vector<Label> sorted_labels(std::vector<Label> v) {
    std::sort(v.begin(), v.end(), label_less);
    return v;
}

// order the vertices of an induced cycle, starting at the least label and
// moving toward its lesser neighbor
std::vector<Label> order_cycle(const Graph& g, const std::vector<Label>& verts) {
    Graph sub = g.induced(verts);
    for (const auto& v : sub.labels())
        if (sub.degree(v) != 2) throw input_error("order_cycle: not a cycle at " + v);
    std::vector<Label> out{sub.labels().front()};
    auto nb = sub.neighbors(out[0]);
    out.push_back(label_less(nb[0], nb[1]) ? nb[0] : nb[1]);
    while (out.size() < verts.size()) {
        auto nn = sub.neighbors(out.back());
        out.push_back(nn[0] == out[out.size() - 2] ? nn[1] : nn[0]);
    }
    if (!g.is_induced_cycle(out)) throw input_error("order_cycle: set is not an induced cycle");
    return out;
}

std::vector<Label> order_path(const Graph& g, const std::vector<Label>& verts) {
    Graph sub = g.induced(verts);
    if (verts.size() == 1) return {sub.labels().front()};
    std::vector<Label> ends;
    for (const auto& v : sub.labels())
        if (sub.degree(v) == 1) ends.push_back(v);
    if (ends.size() != 2) throw input_error("order_path: set is not a path");
    std::vector<Label> out{label_less(ends[0], ends[1]) ? ends[0] : ends[1]};
    while (out.size() < verts.size()) {
        bool step = false;
        for (const auto& w : sub.neighbors(out.back()))
            if (out.size() < 2 || w != out[out.size() - 2]) {
                out.push_back(w);
                step = true;
                break;
            }
        if (!step) throw input_error("order_path: set is not a path");
    }
    if (!g.is_induced_path(out)) throw input_error("order_path: set is not an induced path");
    return out;
}

// hub of an exact wheel: deleting it leaves an induced cycle it dominates
std::optional<Label> wheel_hub(const Graph& g) {
    for (const auto& v : sorted_labels(g.labels())) {
        if (g.degree(v) != g.size() - 1) continue;
        std::vector<Label> rest;
        for (const auto& w : g.labels())
            if (w != v) rest.push_back(w);
        Graph sub = g.induced(rest);
        bool cyc = sub.is_connected();
        for (const auto& w : sub.labels()) cyc = cyc && sub.degree(w) == 2;
        if (cyc) return v;
    }
    return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// fan contraction (path contraction by local complementations)
// ---------------------------------------------------------------------------

Trace fan_contract(const Graph& g, const std::vector<Label>& path, const Label& q) {
    const int m = (int)path.size();
    if (m < 4) throw input_error("fan_contract: path must have at least 4 vertices");
    if (!g.is_induced_path(path)) throw input_error("fan_contract: not an induced path");
    if (!g.has_vertex(q)) throw input_error("fan_contract: unknown apex");
    std::set<Label> pset(path.begin(), path.end());
    if (pset.count(q)) throw input_error("fan_contract: apex lies on the path");
    for (int i = 1; i + 1 < m; ++i)
        for (const auto& w : g.neighbors(path[i]))
            if (!pset.count(w) && w != q)
                throw input_error("fan_contract: interior vertex " + path[i] +
                                  " touches the rest of the graph");
    bool has_mid = false;
    for (const auto& w : g.neighbors(q)) {
        if (!pset.count(w)) continue;
        if (w == path[0] || w == path[1] || w == path[m - 1])
            throw input_error("fan_contract: apex adjacent to p1, p2 or pm");
        has_mid = true;
    }
    if (!has_mid) throw input_error("fan_contract: apex has no neighbor in p3..p(m-1)");

    TraceBuilder tb(g);
    std::vector<Label> P = path;
    // smooth quiet interior vertices (those not adjacent to the apex)
    bool again = true;
    while (again) {
        again = false;
        for (size_t i = 2; i + 1 < P.size(); ++i) {
            if (tb.current().degree(P[i]) == 2) {
                tb.smooth(P[i]);
                P.erase(P.begin() + i);
                again = true;
                break;
            }
        }
    }
    // shorten in threes while seven or more vertices remain
    while (P.size() >= 7) {
        tb.lc(P[3]);
        tb.del({P[3]});
        P.erase(P.begin() + 3);
        tb.smooth(P[2]);
        P.erase(P.begin() + 2);
        tb.smooth(P[2]);
        P.erase(P.begin() + 2);
    }
    if (P.size() == 4) {
        tb.smooth(P[1]);
    } else if (P.size() == 5) {
        tb.lc(P[2]);
        tb.del({P[2]});
        tb.smooth(P[3]);
    } else if (P.size() == 6) {
        tb.pivot(P[2], P[3]);
        tb.del({P[2], P[3]});
        tb.smooth(P[4]);
    }
    return tb.finish();
}

RemovalKind connectivity_preserving_removal(const Graph& h, const Label& v) {
    if (h.size() < 2) throw input_error("removal: graph needs at least 2 vertices");
    if (!h.is_connected()) throw input_error("removal: graph must be connected");
    if (!h.has_vertex(v)) throw input_error("removal: unknown vertex " + v);
    if (h.removed({v}).is_connected()) return RemovalKind::Delete;
    Graph alt = h.local_complement(v).removed({v});
    if (!alt.is_connected()) throw input_error("removal: neither choice keeps connectivity");
    return RemovalKind::ComplementThenDelete;
}

// ---------------------------------------------------------------------------
// reduce-connected
// ---------------------------------------------------------------------------

namespace {

void reduce_check_preconditions(const Graph& g, const std::vector<Label>& a,
                                const std::vector<Label>& u, const std::vector<Label>& s,
                                const Label& root) {
    std::set<Label> as(a.begin(), a.end()), us(u.begin(), u.end()), ss(s.begin(), s.end());
    for (const auto& x : us)
        if (as.count(x)) throw input_error("reduce: A and U intersect");
    for (const auto& x : ss)
        if (as.count(x) || us.count(x)) throw input_error("reduce: S overlaps A or U");
    for (const auto& x : a)
        for (const auto& y : s)
            if (g.adjacent(x, y)) throw input_error("reduce: edge between A and S");
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = i + 1; j < u.size(); ++j)
            if (g.adjacent(u[i], u[j])) throw input_error("reduce: U is not independent");
    for (const auto& x : u) {
        bool has = false;
        for (const auto& y : g.neighbors(x))
            if (ss.count(y)) has = true;
        if (!has) throw input_error("reduce: U-vertex without S-neighbor: " + x);
    }
    if (!ss.count(root)) throw input_error("reduce: root is not in S");
    std::set<Label> nu;
    for (const auto& x : u)
        for (const auto& y : g.neighbors(x))
            if (ss.count(y)) nu.insert(y);
    for (const auto& v : nu) {
        std::vector<Label> keep;
        for (const auto& x : s)
            if (x == v || x == root || !nu.count(x)) keep.push_back(x);
        Graph sub = g.induced(keep);
        if (sub.bfs_distances(sub.index_of(v))[sub.index_of(root)] < 0)
            throw input_error("reduce: root-path condition fails at " + v);
    }
}

std::vector<Label> guarded_path(const Graph& g, const std::vector<Label>& s_part, const Label& v,
                                const Label& root, const std::set<Label>& avoid) {
    std::vector<Label> keep;
    for (const auto& x : s_part)
        if (x == v || x == root || !avoid.count(x)) keep.push_back(x);
    Graph sub = g.induced(keep);
    std::map<Label, Label> parent;
    std::vector<Label> frontier{v};
    parent[v] = v;
    while (!frontier.empty() && !parent.count(root)) {
        std::vector<Label> next;
        for (const auto& x : frontier)
            for (const auto& y : sub.neighbors(x))
                if (!parent.count(y)) {
                    parent[y] = x;
                    next.push_back(y);
                }
        frontier = std::move(next);
    }
    if (!parent.count(root)) throw input_error("reduce: lost the guarded path");
    std::vector<Label> path{root};
    while (path.back() != v) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

ReduceResult reduce_connected(const Graph& g, const std::vector<Label>& a,
                              const std::vector<Label>& u, const std::vector<Label>& s,
                              const Label& root, int n) {
    if (n < 1) throw input_error("reduce: n must be positive");
    reduce_check_preconditions(g, a, u, s, root);
    ReduceResult out;
    std::set<Label> ss(s.begin(), s.end());
    std::set<Label> nu;
    for (const auto& x : u)
        for (const auto& y : g.neighbors(x))
            if (ss.count(y)) nu.insert(y);

    TraceBuilder tb(g);
    auto finish_direct = [&](const Label& center, std::vector<Label> uprime) {
        std::vector<Label> keep = a;
        keep.insert(keep.end(), uprime.begin(), uprime.end());
        keep.push_back(center);
        tb.keep_only(keep);
        out.u_prime = std::move(uprime);
        out.center = center;
        out.trace = tb.finish();
    };

    // root already attached: the path condition forces N(U) ∩ S = {root}
    if (nu.count(root)) {
        finish_direct(root, sorted_labels(u));
        return out;
    }
    // some S-vertex already dominates n of U
    for (const auto& sv : sorted_labels({nu.begin(), nu.end()})) {
        std::vector<Label> nb;
        for (const auto& x : u)
            if (g.adjacent(sv, x)) nb.push_back(x);
        if ((int)nb.size() >= n) {
            nb = sorted_labels(nb);
            nb.resize(n);
            finish_direct(sv, std::move(nb));
            return out;
        }
    }

    // induced matching in the U-S incidence bipartite graph
    std::vector<Label> nuv = sorted_labels({nu.begin(), nu.end()});
    Graph bip = [&] {
        GraphBuilder b;
        for (const auto& x : u) b.add_vertex(x);
        for (const auto& y : nuv) b.add_vertex(y);
        for (const auto& x : u)
            for (const auto& y : nuv)
                if (g.adjacent(x, y)) b.add_edge(x, y);
        return b.build();
    }();
    auto pairs = induced_matching(bip, u, nuv, std::max(1, n - 1));
    std::vector<Label> mus, mss;
    for (auto& [mu_, ms_] : pairs) {
        mus.push_back(mu_);
        mss.push_back(ms_);
    }

    // keep A, the matched pairs, and the guarded paths toward the root
    std::set<Label> pathverts;
    for (const auto& sv : mss) {
        std::set<Label> avoid = nu;
        avoid.erase(sv);
        for (const auto& x : guarded_path(g, s, sv, root, avoid)) pathverts.insert(x);
    }
    {
        std::vector<Label> keep = a;
        keep.insert(keep.end(), mus.begin(), mus.end());
        for (const auto& x : mss)
            if (!pathverts.count(x)) keep.push_back(x);
        keep.insert(keep.end(), pathverts.begin(), pathverts.end());
        tb.keep_only(keep);
    }

    // eliminate everything outside A ∪ matched vertices, preserving
    // connectivity away from A
    std::set<Label> u1(a.begin(), a.end());
    u1.insert(mus.begin(), mus.end());
    std::set<Label> u2(mss.begin(), mss.end());
    while (true) {
        std::vector<Label> extra;
        for (const auto& v : tb.current().labels())
            if (!u1.count(v) && !u2.count(v)) extra.push_back(v);
        if (extra.empty()) break;
        Label v = sorted_labels(extra).front();
        std::vector<Label> away;
        for (const auto& x : tb.current().labels())
            if (!u1.count(x)) away.push_back(x);
        Graph rest = tb.current().induced(away);
        if (connectivity_preserving_removal(rest, v) == RemovalKind::Delete) {
            tb.del({v});
        } else {
            tb.lc(v);
            tb.del({v});
        }
    }

    // dichotomy: a center seeing a clique or independent set among the matched
    // part, else a long induced path through it
    Graph g2 = tb.current();
    Graph gu2 = g2.induced(mss);
    std::map<Label, Label> u_of;
    for (size_t i = 0; i < mss.size(); ++i) u_of[mss[i]] = mus[i];

    for (const auto& sj : sorted_labels(mss)) {
        std::vector<int> nbidx;
        for (const auto& x : gu2.neighbors(sj)) nbidx.push_back(gu2.index_of(x));
        if ((int)nbidx.size() < n) continue;
        bool complemented = false;
        auto ind = find_independent_set(gu2, nbidx, n);
        if (!ind) {
            auto cl = find_clique(gu2, nbidx, n);
            if (!cl) continue;
            ind = cl;
            complemented = true;
        }
        std::vector<Label> ds;
        for (int ix : *ind) ds.push_back(gu2.label_at(ix));
        ds = sorted_labels(ds);
        tb.del({u_of[sj]});
        if (complemented) tb.lc(sj);
        for (const auto& d : ds) tb.lc(d);
        std::vector<Label> uprime;
        for (const auto& d : ds) uprime.push_back(u_of[d]);
        uprime = sorted_labels(uprime);
        std::vector<Label> keep = a;
        keep.insert(keep.end(), uprime.begin(), uprime.end());
        keep.push_back(sj);
        tb.keep_only(keep);
        out.u_prime = uprime;
        out.center = sj;
        out.trace = tb.finish();
        return out;
    }

    auto path = degree_or_induced_path(gu2, gu2.size() + 1, 2 * n - 1);
    if (path.kind != DegreeOrPath::Kind::Path) {
        out.failed_stage = "degree-or-path dichotomy";
        return out;
    }
    const auto& P = path.path;
    for (int i = 0; i < 2 * n - 2; ++i) tb.lc(P[i]);
    std::vector<Label> gone(P.begin(), P.begin() + 2 * n - 2);
    for (int i = 1; i < 2 * n - 2; i += 2) gone.push_back(u_of[P[i]]);
    tb.del(gone);
    std::vector<Label> uprime;
    for (int i = 0; i < 2 * n - 1; i += 2) uprime.push_back(u_of[P[i]]);
    uprime = sorted_labels(uprime);
    std::vector<Label> keep = a;
    keep.insert(keep.end(), uprime.begin(), uprime.end());
    keep.push_back(P[2 * n - 2]);
    tb.keep_only(keep);
    out.u_prime = uprime;
    out.center = P[2 * n - 2];
    out.trace = tb.finish();
    return out;
}

// ---------------------------------------------------------------------------
// partial wheel (hub with many spokes on an induced cycle)
// ---------------------------------------------------------------------------

Trace partial_wheel_chain(TraceBuilder tb, const Label& hub, int n) {
    while (true) {
        const Graph& g = tb.current();
        std::vector<Label> rim;
        for (const auto& v : g.labels())
            if (v != hub) rim.push_back(v);
        std::vector<Label> cyc = order_cycle(g, rim);
        const int s = (int)cyc.size();
        const int t = g.degree(hub);
        if (s < n + 3 || t < n)
            throw input_error("partial wheel: cycle too short or hub degree too small");
        std::vector<char> adj(s, 0);
        for (int i = 0; i < s; ++i) adj[i] = g.adjacent(hub, cyc[i]);
        auto at = [&](int i) { return cyc[((i % s) + s) % s]; };

        if (t == n) {
            for (int i = 0; i < s; ++i)
                if (!adj[i]) tb.smooth(cyc[i]);
            return tb.finish();
        }
        if (s == n + 3) {
            std::vector<int> non;
            for (int i = 0; i < s; ++i)
                if (!adj[i]) non.push_back(i);
            if (t == n + 1) {
                int i = non[0], j = non[1];
                for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
                    if (x == (y + 1) % s || x == (y + 2) % s) continue;
                    tb.lc(at(x));
                    tb.lc(at(y + 1));
                    tb.lc(at(y + 2));
                    tb.del({at(x), at(y + 1), at(y + 2)});
                    return tb.finish();
                }
                throw input_error("partial wheel: no valid ordering of the two non-neighbors");
            }
            if (t == n + 2) {
                int i = non[0];
                tb.lc(at(i + 1));
                tb.lc(at(i));
                tb.lc(at(i - 1));
                tb.del({at(i - 1), at(i), at(i + 1)});
                return tb.finish();
            }
            tb.lc(at(0));
            tb.lc(at(-1));
            tb.lc(at(1));
            tb.del({at(-1), at(0), at(1)});
            return tb.finish();
        }
        if (s > t) {
            // smooth the first non-neighbor after the hub's first neighbor
            int f = 0;
            while (!adj[f]) ++f;
            int i = f;
            do {
                i = (i + 1) % s;
            } while (adj[i]);
            tb.smooth(cyc[i]);
            continue;
        }
        // s == t > n+3: complete hub; peel any rim vertex
        tb.lc(cyc[0]);
        tb.del({cyc[0]});
    }
}

Trace wheel_from_partial_wheel(const Graph& g, const Label& hub, int n) {
    if (n < 3) throw input_error("partial wheel: n >= 3");
    if (!g.has_vertex(hub)) throw input_error("partial wheel: unknown hub");
    std::vector<Label> rim;
    for (const auto& v : g.labels())
        if (v != hub) rim.push_back(v);
    std::vector<Label> cyc = order_cycle(g, rim);
    if ((int)cyc.size() < n + 3) throw input_error("partial wheel: cycle shorter than n+3");
    if (g.degree(hub) < n) throw input_error("partial wheel: hub degree below n");
    return partial_wheel_chain(TraceBuilder(g), hub, n);
}

// ---------------------------------------------------------------------------
// drums, clams, hanging ladders (exact structures, explicit roles)
// ---------------------------------------------------------------------------

namespace {

void require_valid(const Graph& g, const StructureSpec& spec) {
    auto viol = validate(g, spec);
    if (!viol.empty())
        throw input_error("invalid " + kind_name(spec.kind) + ": " + viol.front());
}

// exact drum of order 2n-1: path roles in order, spokes aligned; leaves W_n
void drum_worker(TraceBuilder& tb, const std::vector<Label>& vpath, const std::vector<Label>& us,
                 int n) {
    const int N = 2 * n - 1;
    for (int i = 0; i < N - 1; ++i) tb.lc(vpath[i]);
    std::vector<Label> gone;
    for (int i = 1; i < N - 1; i += 2) gone.push_back(us[i]);
    for (int i = 0; i < N - 1; ++i) gone.push_back(vpath[i]);
    tb.del(gone);
    tb.smooth_excluding({});
}

// exact clam with ordered path; leaves W_2n or W_2n+1
void clam_worker(TraceBuilder& tb, const std::vector<Label>& path, int n) {
    std::vector<Label> gone;
    for (int i = 3; i <= 3 * n; i += 3) {
        tb.lc(path[i - 1]);
        gone.push_back(path[i - 1]);
    }
    tb.del(gone);
    tb.smooth_excluding({});
}

// exact hanging ladder by its ordered side paths; leaves W_4n
void hanging_ladder_worker(TraceBuilder& tb, const std::vector<Label>& vside,
                           const std::vector<Label>& wside, int n) {
    std::vector<Label> gone;
    for (int i = 3; i <= 3 * n; i += 3) {
        tb.pivot(vside[i - 1], wside[i - 1]);
        gone.push_back(vside[i - 1]);
        gone.push_back(wside[i - 1]);
    }
    tb.del(gone);
    tb.smooth_excluding({});
}

}  // namespace

Trace wheel_from_drum(const Graph& g, int n) {
    if (n < 3) throw input_error("drum extraction: n >= 3");
    StructureSpec spec{.kind = StructureKind::Drum, .order = 2 * n - 1};
    require_valid(g, spec);
    TraceBuilder tb(g);
    std::vector<Label> vp, us;
    for (int i = 1; i <= 2 * n - 1; ++i) {
        vp.push_back(lab("v", i));
        us.push_back(lab("u", i));
    }
    drum_worker(tb, vp, us, n);
    return tb.finish();
}

Trace wheel_from_clam(const Graph& g, int n) {
    if (n < 2) throw input_error("clam extraction: n >= 2");
    StructureSpec spec{.kind = StructureKind::Clam, .order = 3 * n + 4, .h1h2 = false};
    if (!validate(g, spec).empty()) {
        spec.h1h2 = true;
        require_valid(g, spec);
    }
    TraceBuilder tb(g);
    std::vector<Label> path;
    for (int i = 1; i <= 3 * n + 2; ++i) path.push_back(lab("v", i));
    clam_worker(tb, path, n);
    return tb.finish();
}

Trace wheel_from_hanging_ladder(const Graph& g, int n) {
    if (n < 2) throw input_error("hanging ladder extraction: n >= 2");
    StructureSpec spec{.kind = StructureKind::HangingLadder, .order = n};
    require_valid(g, spec);
    TraceBuilder tb(g);
    std::vector<Label> vs, ws;
    for (int i = 1; i <= 3 * n + 2; ++i) {
        vs.push_back(lab("v", i));
        ws.push_back(lab("w", i));
    }
    hanging_ladder_worker(tb, vs, ws, n);
    return tb.finish();
}

// ---------------------------------------------------------------------------
// extended drums
// ---------------------------------------------------------------------------

ExtractResult ext_drum_chain(TraceBuilder tb, const std::vector<Label>& cycle,
                             const std::vector<Label>& us, const std::vector<Label>& ss,
                             const Label& root, int n) {
    ExtractResult out;
    std::set<Label> cyc_set(cycle.begin(), cycle.end());
    std::vector<Label> protect = us;
    protect.insert(protect.end(), ss.begin(), ss.end());
    for (const auto& u : us) {
        std::vector<Label> att;
        for (const auto& x : tb.current().neighbors(u))
            if (cyc_set.count(x)) att.push_back(x);
        if (att.size() != 1) {
            out.failed_stage = "extended drum shape (attachment not unique)";
            return out;
        }
        protect.push_back(att[0]);
    }
    tb.smooth_excluding(protect);
    std::vector<Label> attach;
    for (const auto& v : tb.current().labels())
        if (cyc_set.count(v)) attach.push_back(v);
    if (attach.size() != us.size() || attach.size() < 3) {
        out.failed_stage = "extended drum shape (cycle does not shrink to the spokes)";
        return out;
    }
    auto red = reduce_connected(tb.current(), attach, us, ss, root, n);
    if (!red.ok()) {
        out.failed_stage = "reduce-connected: " + red.failed_stage;
        return out;
    }
    tb.append(*red.trace);
    std::vector<Label> chosen = red.u_prime;
    chosen.resize(n);
    std::vector<Label> keep = attach;
    keep.insert(keep.end(), chosen.begin(), chosen.end());
    keep.push_back(red.center);
    tb.keep_only(keep);
    tb.smooth_excluding({});
    if (!is_isomorphic(tb.current(), wheel_graph(n))) {
        out.failed_stage = "wheel assembly";
        return out;
    }
    out.trace = tb.finish();
    return out;
}

namespace {

std::vector<Label> tail_of(const StructureSpec& spec) {
    if (spec.tail.kind == TailSpec::Kind::Star) return {"z"};
    return spec.tail.vertices;
}

Label tail_root_of(const StructureSpec& spec) {
    if (spec.tail.kind == TailSpec::Kind::Star) return "z";
    return spec.tail.root;
}

}  // namespace

ExtractResult wheel_from_extended_drum(const Graph& g, const StructureSpec& spec, int n) {
    if (spec.kind != StructureKind::ExtendedDrum) throw input_error("spec kind mismatch");
    if (n < 3) throw input_error("extended drum extraction: n >= 3");
    require_valid(g, spec);
    std::vector<Label> cycle, us;
    for (int i = 1; i <= spec.order; ++i) {
        cycle.push_back(lab("w", i));
        us.push_back(lab("u", i));
    }
    return ext_drum_chain(TraceBuilder(g), cycle, us, tail_of(spec), tail_root_of(spec), n);
}

// ---------------------------------------------------------------------------
// extended clams
// ---------------------------------------------------------------------------

namespace {

// exact simple extended clam by ordered roles (ps alternate v/w attachments);
// h complete to vs and ws, z complete to ws, h-z non-adjacent. Leaves W_2n.
void simple_ext_clam_worker(TraceBuilder& tb, const std::vector<Label>& ps,
                            const std::vector<Label>& vs, const std::vector<Label>& ws,
                            const Label& h, const Label& z, int n) {
    const int order = (int)vs.size();  // 2n+1
    for (int j = 0; j < 2 * n; ++j) tb.lc(ws[j]);
    std::vector<Label> gone(ws.begin(), ws.end());
    for (int i = 3; i <= order - 2; i += 2) gone.push_back(vs[i - 1]);
    gone.push_back(ps[4 * n + 1]);
    tb.del(gone);
    tb.smooth_excluding({});
    // clam in hand: recover the path order, then extract the wheel
    std::vector<Label> rest;
    for (const auto& v : tb.current().labels())
        if (v != h && v != z) rest.push_back(v);
    std::vector<Label> path = order_path(tb.current(), rest);
    clam_worker(tb, path, n);
}

// Extended clam with explicit ordered roles; the attached part feeds the w
// side. Ends in an exact W_n.
ExtractResult ext_clam_chain(TraceBuilder tb0, const std::vector<Label>& ps,
                             const std::vector<Label>& vs, const std::vector<Label>& ws,
                             const Label& h, const std::vector<Label>& ss, const Label& root,
                             int n) {
    ExtractResult out;
    const int order = (int)vs.size();
    const Graph& g0 = tb0.current();
    std::vector<int> anti, comp;
    for (int i = 0; i < order; ++i) (g0.adjacent(h, ws[i]) ? comp : anti).push_back(i);

    // anti-complete leg: the long cycle through h plus the untouched w's forms
    // an extended drum
    {
        std::vector<int> usable;
        for (int i : anti)
            if (i + 1 < order) usable.push_back(i);
        if (!usable.empty() && order >= 2) {
            TraceBuilder tb = tb0;
            std::vector<Label> cycle{h, vs.front()};
            for (int i = 0; i + 1 < 2 * order; ++i) cycle.push_back(ps[i]);
            cycle.push_back(vs.back());
            std::vector<Label> us;
            for (int i : usable) us.push_back(ws[i]);
            std::vector<Label> keep = cycle;
            keep.insert(keep.end(), us.begin(), us.end());
            keep.insert(keep.end(), ss.begin(), ss.end());
            tb.keep_only(keep);
            if (tb.current().is_induced_cycle(cycle)) {
                auto r = ext_drum_chain(std::move(tb), cycle, us, ss, root, n);
                if (r.ok()) return r;
                out.failed_stage = "anti-complete leg: " + r.failed_stage;
            } else {
                out.failed_stage = "anti-complete leg: cycle not induced";
            }
        } else {
            out.failed_stage = "anti-complete leg: no usable block";
        }
    }

    // complete leg: reduce the attached side over the h-covered w's, then run
    // the simple extended clam
    {
        if ((int)comp.size() < 1) {
            out.failed_stage += " | complete leg: no covered w's";
            return out;
        }
        TraceBuilder tb = tb0;
        std::vector<Label> keep{h};
        keep.insert(keep.end(), ss.begin(), ss.end());
        for (int i = 0; i < 2 * order; ++i) keep.push_back(ps[i]);
        std::vector<Label> wkeep;
        for (int i : comp) {
            keep.push_back(vs[i]);
            keep.push_back(ws[i]);
            wkeep.push_back(ws[i]);
        }
        tb.keep_only(keep);
        std::vector<Label> a_side;
        std::set<Label> ws_set(wkeep.begin(), wkeep.end()), ss_set(ss.begin(), ss.end());
        for (const auto& v : tb.current().labels())
            if (!ws_set.count(v) && !ss_set.count(v)) a_side.push_back(v);
        auto red = reduce_connected(tb.current(), a_side, wkeep, ss, root, 2 * n + 1);
        if (!red.ok()) {
            out.failed_stage += " | complete leg: reduce-connected: " + red.failed_stage;
            return out;
        }
        tb.append(*red.trace);
        std::set<Label> upr(red.u_prime.begin(), red.u_prime.end());
        std::vector<int> J;
        for (int i : comp)
            if (upr.count(ws[i])) J.push_back(i);
        J.resize(2 * n + 1);
        std::vector<Label> ps2, vs2, ws2;
        for (int j : J) {
            ps2.push_back(ps[2 * j]);
            ps2.push_back(ps[2 * j + 1]);
            vs2.push_back(vs[j]);
            ws2.push_back(ws[j]);
        }
        std::vector<Label> keep2{h, red.center};
        for (int x = 2 * J.front(); x <= 2 * J.back() + 1; ++x) keep2.push_back(ps[x]);
        keep2.insert(keep2.end(), vs2.begin(), vs2.end());
        keep2.insert(keep2.end(), ws2.begin(), ws2.end());
        tb.keep_only(keep2);
        std::vector<Label> protect{h, red.center};
        protect.insert(protect.end(), ps2.begin(), ps2.end());
        protect.insert(protect.end(), vs2.begin(), vs2.end());
        protect.insert(protect.end(), ws2.begin(), ws2.end());
        tb.smooth_excluding(protect);
        simple_ext_clam_worker(tb, ps2, vs2, ws2, h, red.center, n);
        auto hub = wheel_hub(tb.current());
        if (!hub) {
            out.failed_stage += " | complete leg: wheel assembly";
            return out;
        }
        out.trace = partial_wheel_chain(std::move(tb), *hub, n);
        out.failed_stage.clear();
        return out;
    }
}

}  // namespace

Trace clam_from_simple_extended_clam(const Graph& g, int n) {
    if (n < 2) throw input_error("simple extended clam extraction: n >= 2");
    StructureSpec spec{.kind = StructureKind::SimpleExtendedClam, .order = 2 * n + 1};
    require_valid(g, spec);
    TraceBuilder tb(g);
    for (int j = 1; j <= 2 * n; ++j) tb.lc(lab("w", j));
    std::vector<Label> gone;
    for (int j = 1; j <= 2 * n + 1; ++j) gone.push_back(lab("w", j));
    for (int i = 3; i <= 2 * n - 1; i += 2) gone.push_back(lab("v", i));
    gone.push_back(lab("p", 4 * n + 2));
    tb.del(gone);
    tb.smooth_excluding({});
    return tb.finish();
}

ExtractResult wheel_from_extended_clam(const Graph& g, const StructureSpec& spec, int n) {
    if (spec.kind != StructureKind::ExtendedClam) throw input_error("spec kind mismatch");
    if (n < 3) throw input_error("extended clam extraction: n >= 3");
    require_valid(g, spec);
    std::vector<Label> ps, vs, ws;
    for (int i = 1; i <= 2 * spec.order; ++i) ps.push_back(lab("p", i));
    for (int i = 1; i <= spec.order; ++i) {
        vs.push_back(lab("v", i));
        ws.push_back(lab("w", i));
    }
    return ext_clam_chain(TraceBuilder(g), ps, vs, ws, "h", tail_of(spec), tail_root_of(spec), n);
}

// ---------------------------------------------------------------------------
// extended hanging ladders
// ---------------------------------------------------------------------------

namespace {

// Simple extended hanging ladder with explicit ordered roles. Reduces the
// attached part, complements the chosen rungs, trims to the ladder window and
// finishes through the exact ladder. Ends in W_4n.
ExtractResult simple_ladder_chain(TraceBuilder tb, const std::vector<Label>& ps,
                                  const std::vector<Label>& qs, const std::vector<Label>& vs,
                                  const std::vector<Label>& ws, const std::vector<Label>& ss,
                                  const Label& root, int n) {
    ExtractResult out;
    const int order = (int)vs.size();
    if (order < 2 * n + 2) {
        out.failed_stage = "order below 2n+2";
        return out;
    }
    std::vector<Label> a_side = vs;
    a_side.insert(a_side.end(), ps.begin(), ps.end());
    a_side.insert(a_side.end(), qs.begin(), qs.end());
    auto red = reduce_connected(tb.current(), a_side, ws, ss, root, 2 * n + 2);
    if (!red.ok()) {
        out.failed_stage = "reduce-connected: " + red.failed_stage;
        return out;
    }
    tb.append(*red.trace);
    std::set<Label> upr(red.u_prime.begin(), red.u_prime.end());
    std::vector<int> ii;  // chosen column indices (0-based)
    for (int i = 0; i < order; ++i)
        if (upr.count(ws[i])) ii.push_back(i);
    ii.resize(2 * n + 2);
    std::vector<int> vops{ii[0], ii[1]};
    for (int j = 3; j <= 2 * n + 1; j += 2) vops.push_back(ii[j]);
    for (int j = 0; j < 2 * n; ++j) tb.lc(ws[ii[j]]);
    for (int i : vops) tb.lc(vs[i]);
    int lo = 2 * ii[0], hi = 2 * ii[2 * n + 1];  // 0-based column range in ps/qs
    std::vector<Label> keep{red.center};
    for (int x = lo; x <= hi; ++x) {
        keep.push_back(ps[x]);
        keep.push_back(qs[x]);
    }
    tb.keep_only(keep);
    std::vector<int> cols;
    for (int i : vops) cols.push_back(2 * i);
    for (int j = 0; j < 2 * n; ++j) cols.push_back(2 * ii[j] + 1);
    std::sort(cols.begin(), cols.end());
    std::vector<Label> protect{red.center};
    for (int x : cols) {
        protect.push_back(ps[x]);
        protect.push_back(qs[x]);
    }
    tb.smooth_excluding(protect);
    std::vector<Label> vside, wside;
    for (int x : cols) {
        vside.push_back(ps[x]);
        wside.push_back(qs[x]);
    }
    hanging_ladder_worker(tb, vside, wside, n);
    if (!is_isomorphic(tb.current(), wheel_graph(4 * n))) {
        out.failed_stage = "wheel assembly";
        return out;
    }
    out.trace = tb.finish();
    return out;
}

// contract a run of consecutive q-path vertices onto a single vertex using the
// given apex; the run's predecessor and successor on the current path supply
// the fan's end vertices
bool contract_q_run(TraceBuilder& tb, const std::vector<Label>& qpart_now,
                    const std::vector<Label>& run, const Label& apex) {
    // qpart_now is the current ordered path containing the run
    auto it = std::find(qpart_now.begin(), qpart_now.end(), run.front());
    if (it == qpart_now.end() || it == qpart_now.begin()) return false;
    size_t start = it - qpart_now.begin();
    if (start + run.size() >= qpart_now.size()) return false;
    std::vector<Label> fan;
    fan.push_back(qpart_now[start - 1]);
    for (size_t i = 0; i < run.size(); ++i) {
        if (qpart_now[start + i] != run[i]) return false;
        fan.push_back(run[i]);
    }
    fan.push_back(qpart_now[start + run.size()]);
    Trace fc = fan_contract(tb.current(), fan, apex);
    tb.append(fc);
    return true;
}

struct LadderRoles {
    std::vector<Label> ps;  // 2*order, ordered
    std::vector<Label> qs;  // r, ordered
    std::vector<Label> vs, ws;
    std::vector<int> anchors;  // 1-based into qs, size order+1, last = r+1
    std::vector<Label> ss;
    Label root;
};

// n-extended hanging ladder cascade on explicit roles; ends in exact W_n
ExtractResult n_ext_ladder_chain(const Graph& g, const LadderRoles& R, int n) {
    ExtractResult out;
    const int L = (int)R.vs.size();
    const int r = (int)R.qs.size();
    auto q_at = [&](int x) { return R.qs[x - 1]; };  // 1-based

    // claim one: a width-m1 block of w's with no edges into its anchor range
    // yields an extended drum on the cycle through the two flanking v's
    {
        int best_i = -1, best_w = 0;
        for (int i = 0; i + 1 < L; ++i) {
            for (int w = best_w + 1; i + w + 1 <= L; ++w) {
                bool clean = true;
                for (int k = i + 1; k <= i + w && clean; ++k)
                    for (int x = R.anchors[i]; x <= R.anchors[i + w] && clean; ++x)
                        if (g.adjacent(R.ws[k - 1], q_at(x))) clean = false;
                if (!clean) break;
                best_i = i;
                best_w = w;
            }
        }
        if (best_w >= n) {
            int i = best_i, m1 = best_w;
            int ip = -1;
            for (int x = R.anchors[i]; x < R.anchors[i + 1]; ++x)
                if (g.adjacent(R.vs[i], q_at(x))) ip = x;
            if (ip > 0) {
                std::vector<Label> cycle;
                for (int x = ip; x <= R.anchors[i + m1]; ++x) cycle.push_back(q_at(x));
                cycle.push_back(R.vs[i + m1]);
                for (int x = 2 * (i + m1 + 1) - 1; x >= 2 * i + 1; --x)
                    cycle.push_back(R.ps[x - 1]);
                cycle.push_back(R.vs[i]);
                std::vector<Label> us;
                for (int k = i + 1; k <= i + m1; ++k) us.push_back(R.ws[k - 1]);
                TraceBuilder tb(g);
                std::vector<Label> keep = cycle;
                keep.insert(keep.end(), us.begin(), us.end());
                keep.insert(keep.end(), R.ss.begin(), R.ss.end());
                tb.keep_only(keep);
                if (tb.current().is_induced_cycle(cycle)) {
                    auto rr = ext_drum_chain(std::move(tb), cycle, us, R.ss, R.root, n);
                    if (rr.ok()) return rr;
                    out.failed_stage = "no-edge window: " + rr.failed_stage;
                } else {
                    out.failed_stage = "no-edge window: cycle not induced";
                }
            } else {
                out.failed_stage = "no-edge window: flanking v misses its anchor";
            }
        } else {
            out.failed_stage = "no-edge window: none of width n";
        }
    }

    // claims two and three: a w with two consecutive q-neighbors spanning many
    // anchor windows yields a drum; the spokes are the v's between them
    {
        auto anchor_index_of = [&](int x) {
            int j = 0;
            while (j + 1 <= L && R.anchors[j] <= x) ++j;
            return j;  // anchors[j-1] <= x < anchors[j]
        };
        int bw = -1, bx1 = 0, bx2 = 0, bj1 = 0, bj2 = 0, bgap = 0;
        for (int i = 1; i <= L; ++i) {
            std::vector<int> qn;
            for (int x = 1; x <= r; ++x)
                if (g.adjacent(R.ws[i - 1], q_at(x))) qn.push_back(x);
            for (size_t a2 = 0; a2 + 1 < qn.size(); ++a2) {
                int j1 = anchor_index_of(qn[a2]), j2 = anchor_index_of(qn[a2 + 1]);
                if (j2 - j1 > bgap) {
                    bgap = j2 - j1;
                    bw = i;
                    bx1 = qn[a2];
                    bx2 = qn[a2 + 1];
                    bj1 = j1;
                    bj2 = j2;
                }
            }
        }
        if (bw > 0 && bgap >= 4) {
            // drum spokes: v's at even offsets from j1 whose p attachment
            // avoids p_{2*bw}; take the longer side around bw when needed
            std::vector<int> cand;
            for (int t = 2; bj1 + t + 1 <= bj2; t += 2) cand.push_back(bj1 + t);
            auto side = [&](bool leftside) {
                std::vector<int> sel;
                for (int j : cand) {
                    if (bj1 < bw && bw < bj2) {
                        if (leftside && j >= bw) continue;
                        if (!leftside && j <= bw) continue;
                    }
                    sel.push_back(j);
                }
                return sel;
            };
            std::vector<int> sel = side(true);
            if ((int)sel.size() < 2 * n - 1) sel = side(false);
            if ((int)sel.size() >= 2 * n - 1) {
                sel.resize(2 * n - 1);
                int plo = 2 * sel.front() - 1, phi = 2 * sel.back() - 1;
                std::vector<Label> keep{R.ws[bw - 1]};
                for (int x = bx1; x <= bx2; ++x) keep.push_back(q_at(x));
                for (int x = plo; x <= phi; ++x) keep.push_back(R.ps[x - 1]);
                std::vector<Label> us;
                for (int j : sel) {
                    us.push_back(R.vs[j - 1]);
                    keep.push_back(R.vs[j - 1]);
                }
                TraceBuilder tb(g);
                tb.keep_only(keep);
                bool good = true;
                std::set<Label> qset(R.qs.begin(), R.qs.end());
                auto qpath_now = [&]() {
                    // the q-part forms a cycle through the w; strip the w to
                    // obtain the path oriented from bx1
                    std::vector<Label> qnow{R.ws[bw - 1]};
                    for (const auto& v : tb.current().labels())
                        if (qset.count(v)) qnow.push_back(v);
                    auto cyc = order_cycle(tb.current(), qnow);
                    auto wit = std::find(cyc.begin(), cyc.end(), R.ws[bw - 1]);
                    std::rotate(cyc.begin(), wit, cyc.end());
                    std::vector<Label> qpath(cyc.begin() + 1, cyc.end());
                    if (qpath.size() >= 2 && qpath.front() != q_at(bx1))
                        std::reverse(qpath.begin(), qpath.end());
                    return qpath;
                };
                for (int j : sel) {
                    // contract the q-run carrying v_j's window
                    int lo = std::max(bx1 + 1, R.anchors[j - 2]);
                    int hi = std::min(bx2 - 1, R.anchors[j] - 1);
                    std::vector<Label> run;
                    for (int x = lo; x <= hi; ++x)
                        if (tb.current().has_vertex(q_at(x))) run.push_back(q_at(x));
                    std::vector<Label> qpath;
                    try {
                        qpath = qpath_now();
                    } catch (const input_error&) {
                        good = false;
                        break;
                    }
                    if (run.empty() || !contract_q_run(tb, qpath, run, R.vs[j - 1])) {
                        good = false;
                        break;
                    }
                }
                if (good) {
                    // smooth down to the exact drum
                    std::vector<Label> protect = us, rim, vpath;
                    for (int j : sel) {
                        Label rv;
                        for (const auto& x : tb.current().neighbors(R.vs[j - 1]))
                            if (qset.count(x)) rv = x;
                        if (rv.empty()) {
                            good = false;
                            break;
                        }
                        rim.push_back(rv);
                        protect.push_back(rv);
                        vpath.push_back(R.ps[2 * j - 2]);
                        protect.push_back(R.ps[2 * j - 2]);
                    }
                    if (good) {
                        tb.smooth_excluding(protect);
                        if (tb.current().size() == 3 * (2 * n - 1)) {
                            drum_worker(tb, vpath, us, n);
                            if (is_isomorphic(tb.current(), wheel_graph(n))) {
                                out.trace = tb.finish();
                                out.failed_stage.clear();
                                return out;
                            }
                        }
                        out.failed_stage += " | far-apart: drum shape";
                    } else {
                        out.failed_stage += " | far-apart: rim attachment";
                    }
                } else {
                    out.failed_stage += " | far-apart: contraction";
                }
            } else {
                out.failed_stage += " | far-apart: not enough spokes";
            }
        } else {
            out.failed_stage += " | far-apart: no candidate";
        }
    }

    // main route: spaced anchor groups; contract the two q-runs around each to
    // produce a simple extended hanging ladder, then finish through it
    {
        const int m3 = 2 * n + 2;
        const int m4 = L / (m3 + 1);
        if (m4 < 2) {
            out.failed_stage += " | main route: order too small for spaced groups";
            return out;
        }
        const int m1d = std::max(1, m4 / 2);
        const int half_lo = (m4 - m1d) / 2;
        // group i uses anchor subscripts K..K+m4 with K = i*m4 - half_lo:
        // run2 = q[b_K .. b_{K+2}) with apex v_{K+1}, run1 = q[b_{K+2} .. b_{K+m4})
        // with apex w_{d_i}; consecutive groups tile the anchor range
        std::vector<int> ds, ks;
        bool feasible = true;
        for (int i = 1; i <= m3 && feasible; ++i) {
            int K = i * m4 - half_lo;
            if (K < 1 || K + m4 > L + 1 || i * m4 + m1d > L || R.anchors[K - 1] < 2) {
                feasible = false;
                break;
            }
            int d = -1;
            for (int c = i * m4 + 1; c <= i * m4 + m1d; ++c) {
                bool hit = false, confined = true;
                for (int x = 1; x <= r; ++x) {
                    if (!g.adjacent(R.ws[c - 1], q_at(x))) continue;
                    if (x <= R.anchors[K + 2 - 1] || x >= R.anchors[K + m4 - 1])
                        confined = false;
                    else
                        hit = true;
                }
                if (hit && confined) {
                    d = c;
                    break;
                }
            }
            if (d < 0) {
                feasible = false;
                break;
            }
            ds.push_back(d);
            ks.push_back(K);
        }
        if (!feasible) {
            out.failed_stage += " | main route: no spaced anchor groups";
            return out;
        }
        TraceBuilder tb(g);
        const int qlo = R.anchors[ks.front() - 1] - 1;      // one vertex before the first run
        const int qhi = R.anchors[ks.back() + m4 - 1];      // one vertex after the last run
        std::vector<Label> keep;
        for (int x = qlo; x <= qhi; ++x) keep.push_back(q_at(x));
        const int pl = 2 * (ks.front() + 1) - 1, ph = 2 * ds.back();
        for (int x = pl; x <= ph; ++x) keep.push_back(R.ps[x - 1]);
        for (int i = 0; i < m3; ++i) {
            keep.push_back(R.vs[ks[i] + 1 - 1]);  // v_{K+1}
            keep.push_back(R.ws[ds[i] - 1]);
        }
        keep.insert(keep.end(), R.ss.begin(), R.ss.end());
        tb.keep_only(keep);
        std::set<Label> qset(R.qs.begin(), R.qs.end());
        auto current_qpath = [&]() {
            std::vector<Label> qnow;
            for (const auto& v : tb.current().labels())
                if (qset.count(v)) qnow.push_back(v);
            auto qp = order_path(tb.current(), qnow);
            if (qp.front() != q_at(qlo) && qp.back() == q_at(qlo))
                std::reverse(qp.begin(), qp.end());
            return qp;
        };
        bool good = true;
        std::vector<Label> colv, colw;
        for (int i = 0; i < m3 && good; ++i) {
            int K = ks[i];
            std::vector<Label> run2;
            for (int x = R.anchors[K - 1]; x < R.anchors[K + 1 - 1]; ++x)
                run2.push_back(q_at(x));
            if (!contract_q_run(tb, current_qpath(), run2, R.vs[K + 1 - 1])) {
                good = false;
                break;
            }
            std::vector<Label> run1;
            for (int x = R.anchors[K + 1 - 1]; x < R.anchors[K + m4 - 1]; ++x)
                if (tb.current().has_vertex(q_at(x))) run1.push_back(q_at(x));
            if (run1.empty() || !contract_q_run(tb, current_qpath(), run1, R.ws[ds[i] - 1])) {
                good = false;
                break;
            }
            Label c2, c1;
            for (const auto& x : tb.current().neighbors(R.vs[K + 1 - 1]))
                if (qset.count(x)) c2 = x;
            for (const auto& x : tb.current().neighbors(R.ws[ds[i] - 1]))
                if (qset.count(x)) c1 = x;
            if (c2.empty() || c1.empty()) {
                good = false;
                break;
            }
            colv.push_back(c2);
            colw.push_back(c1);
        }
        if (!good) {
            out.failed_stage += " | main route: contraction";
            return out;
        }
        std::vector<Label> ps2, qs2, vs2, ws2;
        for (int i = 0; i < m3; ++i) {
            vs2.push_back(R.vs[ks[i] + 1 - 1]);
            ws2.push_back(R.ws[ds[i] - 1]);
            ps2.push_back(R.ps[2 * (ks[i] + 1) - 1 - 1]);
            ps2.push_back(R.ps[2 * ds[i] - 1]);
            qs2.push_back(colv[i]);
            qs2.push_back(colw[i]);
        }
        std::vector<Label> keep2;
        for (int x = pl; x <= ph; ++x) keep2.push_back(R.ps[x - 1]);
        keep2.insert(keep2.end(), qs2.begin(), qs2.end());
        keep2.insert(keep2.end(), vs2.begin(), vs2.end());
        keep2.insert(keep2.end(), ws2.begin(), ws2.end());
        keep2.insert(keep2.end(), R.ss.begin(), R.ss.end());
        tb.keep_only(keep2);
        std::vector<Label> protect = ps2;
        protect.insert(protect.end(), qs2.begin(), qs2.end());
        protect.insert(protect.end(), vs2.begin(), vs2.end());
        protect.insert(protect.end(), ws2.begin(), ws2.end());
        protect.insert(protect.end(), R.ss.begin(), R.ss.end());
        tb.smooth_excluding(protect);
        auto rr = simple_ladder_chain(tb, ps2, qs2, vs2, ws2, R.ss, R.root, n);
        if (!rr.ok()) {
            out.failed_stage += " | main route: " + rr.failed_stage;
            return out;
        }
        TraceBuilder tb2(g);
        tb2.append(*rr.trace);
        auto hub = wheel_hub(tb2.current());
        if (!hub) {
            out.failed_stage += " | main route: hub";
            return out;
        }
        out.trace = partial_wheel_chain(std::move(tb2), *hub, n);
        out.failed_stage.clear();
        return out;
    }
}

}  // namespace

ExtractResult wheel_from_simple_ext_ladder(const Graph& g, const StructureSpec& spec, int n) {
    if (spec.kind != StructureKind::SimpleExtendedHangingLadder)
        throw input_error("spec kind mismatch");
    if (n < 2) throw input_error("simple extended ladder extraction: n >= 2");
    require_valid(g, spec);
    std::vector<Label> ps, qs, vs, ws;
    for (int i = 1; i <= 2 * spec.order; ++i) {
        ps.push_back(lab("p", i));
        qs.push_back(lab("q", i));
    }
    for (int i = 1; i <= spec.order; ++i) {
        vs.push_back(lab("v", i));
        ws.push_back(lab("w", i));
    }
    return simple_ladder_chain(TraceBuilder(g), ps, qs, vs, ws, tail_of(spec),
                               tail_root_of(spec), n);
}

ExtractResult wheel_from_n_ext_ladder(const Graph& g, const StructureSpec& spec, int n) {
    if (spec.kind != StructureKind::NExtendedHangingLadder)
        throw input_error("spec kind mismatch");
    if (n < 3) throw input_error("n-extended ladder extraction: n >= 3");
    require_valid(g, spec);
    LadderRoles R;
    const int L = spec.order;
    int r = spec.q_len == 0 ? 2 * L : spec.q_len;
    for (int i = 1; i <= 2 * L; ++i) R.ps.push_back(lab("p", i));
    for (int i = 1; i <= r; ++i) R.qs.push_back(lab("q", i));
    for (int i = 1; i <= L; ++i) {
        R.vs.push_back(lab("v", i));
        R.ws.push_back(lab("w", i));
    }
    if (spec.q_len == 0) {
        for (int i = 1; i <= L; ++i) R.anchors.push_back(2 * i - 1);
        R.anchors.push_back(r + 1);
    } else {
        R.anchors = spec.anchors;
    }
    R.ss = tail_of(spec);
    R.root = tail_root_of(spec);
    return n_ext_ladder_chain(g, R, n);
}

// ---------------------------------------------------------------------------
// patched configurations
// ---------------------------------------------------------------------------

ExtractResult wheel_from_patched_config(const PatchedConfig& cfg, int n) {
    ExtractResult out;
    if (n < 3) throw input_error("patched config: n >= 3");
    auto viol = validate_patched_cycle(cfg.pc, true);
    if (!viol.empty()) throw input_error("patched config: " + viol.front());
    if (cfg.pc.patches.size() != 2) throw input_error("patched config: width must be 2");
    const Graph& g = cfg.pc.graph;
    const auto& Q = cfg.pc.cycle;
    std::set<Label> qset(Q.begin(), Q.end());
    auto check_no_edges = [&](const std::vector<Label>& A, const std::vector<Label>& B,
                              const char* what) {
        for (const auto& x : A)
            for (const auto& y : B)
                if (g.adjacent(x, y)) throw input_error(std::string("patched config: ") + what);
    };
    check_no_edges(Q, cfg.t1, "edges between the cycle and T1");
    check_no_edges(Q, cfg.t2, "edges between the cycle and T2");
    check_no_edges(cfg.pc.patches[0], cfg.t2, "edges between S1 and T2");
    for (int i = 0; i < 2; ++i) {
        const auto& T = i == 0 ? cfg.t1 : cfg.t2;
        std::set<Label> ts(T.begin(), T.end());
        for (const auto& s : cfg.pc.patches[i]) {
            bool has = false;
            for (const auto& x : g.neighbors(s))
                if (ts.count(x)) has = true;
            if (!has)
                throw input_error("patched config: patch vertex without attached neighbor: " + s);
        }
    }

    // hub shortcut: a patch vertex with n cycle-neighbors
    for (const auto& patch : cfg.pc.patches)
        for (const auto& s : sorted_labels(patch)) {
            int deg = 0;
            for (const auto& x : g.neighbors(s))
                if (qset.count(x)) ++deg;
            if (deg >= n && (int)Q.size() >= n + 3) {
                TraceBuilder tb(g);
                std::vector<Label> keep = Q;
                keep.push_back(s);
                tb.keep_only(keep);
                out.trace = partial_wheel_chain(std::move(tb), s, n);
                return out;
            }
        }

    std::map<Label, int> pos;
    for (size_t i = 0; i < Q.size(); ++i) pos[Q[i]] = (int)i + 1;
    auto nbr_positions = [&](const Label& s) {
        std::vector<double> xs;
        for (const auto& x : g.neighbors(s))
            if (qset.count(x)) xs.push_back(pos[x]);
        std::sort(xs.begin(), xs.end());
        return xs;
    };
    const int M = (int)cfg.pc.anchors.size();
    std::vector<std::vector<double>> n1(M), n2(M);
    for (int j = 0; j < M; ++j) {
        n1[j] = nbr_positions(cfg.pc.patches[0][j]);
        n2[j] = nbr_positions(cfg.pc.patches[1][j]);
    }

    std::optional<RegularPartition> rp1;
    for (int l1 = M; l1 >= 4 && !rp1; --l1) rp1 = regular_partition_at_most(n1, n - 1, l1);
    if (!rp1) {
        out.failed_stage = "first regular partition";
        return out;
    }
    auto part_bounds = [&](const RegularPartition& rp, int p) {
        const double inf = std::numeric_limits<double>::infinity();
        double lo = p == 0 ? -inf : rp.cuts[p - 1];
        double hi = p == rp.parts() - 1 ? inf : rp.cuts[p];
        return std::pair<double, double>{lo, hi};
    };
    int bestp = 0, bestcnt = -1;
    for (int p = 0; p < rp1->parts(); ++p) {
        auto [lo, hi] = part_bounds(*rp1, p);
        int cnt = 0;
        for (int c : rp1->chosen) {
            double b = cfg.pc.anchors[c];
            if (b > lo && b <= hi) ++cnt;
        }
        if (cnt > bestcnt) {
            bestcnt = cnt;
            bestp = p;
        }
    }
    auto [i1lo, i1hi] = part_bounds(*rp1, bestp);
    std::vector<int> window;
    for (int c : rp1->chosen) {
        double b = cfg.pc.anchors[c];
        if (b > i1lo && b <= i1hi) window.push_back(c);
    }
    if ((int)window.size() < 4) {
        out.failed_stage = "first partition window too small";
        return out;
    }

    std::vector<std::vector<double>> n2w;
    for (int c : window) {
        std::vector<double> xs;
        for (double v : n2[c])
            if (v > i1lo && v <= i1hi) xs.push_back(v);
        n2w.push_back(std::move(xs));
    }
    std::optional<RegularPartition> rp2;
    for (int l2 = (int)n2w.size(); l2 >= 4 && !rp2; --l2)
        rp2 = regular_partition_at_most(n2w, n - 1, l2);
    if (!rp2) {
        out.failed_stage = "second regular partition";
        return out;
    }
    int bp2 = 0, bc2 = -1;
    for (int p = 0; p < rp2->parts(); ++p) {
        auto [lo, hi] = part_bounds(*rp2, p);
        int cnt = 0;
        for (int c : rp2->chosen) {
            double b = cfg.pc.anchors[window[c]];
            if (b > lo && b <= hi) ++cnt;
        }
        if (cnt > bc2) {
            bc2 = cnt;
            bp2 = p;
        }
    }
    auto [i2lo, i2hi] = part_bounds(*rp2, bp2);
    std::vector<int> us;
    for (int c : rp2->chosen) {
        double b = cfg.pc.anchors[window[c]];
        if (b > i2lo && b <= i2hi) us.push_back(window[c]);
    }
    const int a = (int)us.size();
    int t = 4 * ((a - 2) / 4);
    if (t < 8) {
        out.failed_stage = "selected window too small";
        return out;
    }
    auto anchor_of = [&](int u) { return cfg.pc.anchors[u]; };

    // contract the runs [b_{u_{j-1}}, b_{u_{j+1}}) for the given even offsets
    auto contract_selected = [&](TraceBuilder& tb, const std::vector<int>& run_js,
                                 const std::function<Label(int)>& apex_of) -> bool {
        for (int j : run_js) {
            std::vector<Label> qnow;
            for (const auto& v : tb.current().labels())
                if (qset.count(v)) qnow.push_back(v);
            std::vector<Label> ordered;
            try {
                ordered = tb.current().is_induced_cycle(qnow) ? order_cycle(tb.current(), qnow)
                                                              : order_path(tb.current(), qnow);
            } catch (const input_error&) {
                return false;
            }
            // orient the ordering by original cycle position
            if (ordered.size() >= 2) {
                int pa = pos.count(ordered[0]) ? pos[ordered[0]] : 0;
                int pb = pos.count(ordered[1]) ? pos[ordered[1]] : 0;
                if (pa > pb) std::reverse(ordered.begin(), ordered.end());
            }
            std::vector<Label> run;
            for (int x = anchor_of(us[j - 2]); x < anchor_of(us[j]); ++x)
                if (tb.current().has_vertex(Q[x - 1])) run.push_back(Q[x - 1]);
            if (run.empty()) return false;
            if (tb.current().is_induced_cycle(qnow)) {
                // rotate the cycle order so the run is interior
                auto it = std::find(ordered.begin(), ordered.end(), run.front());
                if (it == ordered.end()) return false;
                std::rotate(ordered.begin(), it, ordered.end());
                std::rotate(ordered.begin(), ordered.begin() + 1, ordered.end());
                ordered.push_back(ordered.front());
            }
            if (!contract_q_run(tb, ordered, run, apex_of(j))) return false;
        }
        return true;
    };

    if (rp1->parts() == 1) {
        // everything collapses onto an extended drum fed by T1
        TraceBuilder tb(g);
        std::vector<Label> keep = Q;
        std::vector<Label> sel;
        for (int j = 2; j <= t; j += 2) sel.push_back(cfg.pc.patches[0][us[j - 1]]);
        keep.insert(keep.end(), sel.begin(), sel.end());
        keep.insert(keep.end(), cfg.t1.begin(), cfg.t1.end());
        tb.keep_only(keep);
        std::vector<int> runs;
        for (int j = 2; j <= t; j += 2) runs.push_back(j);
        if (!contract_selected(tb, runs,
                               [&](int j) { return cfg.pc.patches[0][us[j - 1]]; })) {
            out.failed_stage = "one-part route: contraction";
            return out;
        }
        std::vector<Label> cyc_now;
        for (const auto& v : tb.current().labels())
            if (qset.count(v)) cyc_now.push_back(v);
        std::vector<Label> cycle;
        try {
            cycle = order_cycle(tb.current(), cyc_now);
        } catch (const input_error&) {
            out.failed_stage = "one-part route: cycle shape";
            return out;
        }
        auto r = ext_drum_chain(std::move(tb), cycle, sel, cfg.t1, cfg.root1, n);
        if (r.ok()) return r;
        out.failed_stage = "one-part route: " + r.failed_stage;
        return out;
    }

    // a second part J of the first partition drives the case split
    int jpart = bestp == 0 ? 1 : 0;
    auto [jlo, jhi] = part_bounds(*rp1, jpart);
    SeqTag jtag = rp1->case_tags[jpart];

    // common core: keep the arc spanned by the selected runs plus the chosen
    // patch vertices (alternating sides), contract, and order the roles
    auto build_columns = [&](TraceBuilder& tb, std::vector<Label>& ps_out,
                             std::vector<Label>& vs_out, std::vector<Label>& ws_out,
                             const std::vector<Label>& extra_keep) -> bool {
        std::vector<Label> vsel, wsel;
        for (int j = 4; j <= t - 2; j += 2)
            (j % 4 == 0 ? vsel : wsel).push_back(cfg.pc.patches[j % 4 == 0 ? 0 : 1][us[j - 1]]);
        std::vector<Label> keep;
        for (int x = anchor_of(us[2]); x < anchor_of(us[t - 2]); ++x) keep.push_back(Q[x - 1]);
        keep.insert(keep.end(), vsel.begin(), vsel.end());
        keep.insert(keep.end(), wsel.begin(), wsel.end());
        keep.insert(keep.end(), cfg.t2.begin(), cfg.t2.end());
        keep.insert(keep.end(), extra_keep.begin(), extra_keep.end());
        tb.keep_only(keep);
        std::vector<int> runs;
        for (int j = 4; j <= t - 2; j += 2) runs.push_back(j);
        if (!contract_selected(tb, runs, [&](int j) {
                return cfg.pc.patches[j % 4 == 0 ? 0 : 1][us[j - 1]];
            }))
            return false;
        std::vector<Label> arc;
        std::set<Label> ek(extra_keep.begin(), extra_keep.end());
        for (const auto& v : tb.current().labels())
            if (qset.count(v) && !ek.count(v)) arc.push_back(v);
        std::vector<Label> ps;
        try {
            ps = order_path(tb.current(), arc);
        } catch (const input_error&) {
            return false;
        }
        auto touches = [&](const Label& pv, const std::vector<Label>& set) {
            for (const auto& s : set)
                if (tb.current().adjacent(pv, s)) return true;
            return false;
        };
        if (!touches(ps.front(), vsel)) std::reverse(ps.begin(), ps.end());
        vs_out.clear();
        ws_out.clear();
        for (size_t i = 0; i < ps.size(); ++i) {
            const auto& set = i % 2 == 0 ? vsel : wsel;
            Label who;
            for (const auto& s : set)
                if (tb.current().adjacent(ps[i], s)) who = s;
            if (who.empty()) return false;
            (i % 2 == 0 ? vs_out : ws_out).push_back(who);
        }
        ps_out = ps;
        return vs_out.size() == ws_out.size();
    };

    if (jtag == SeqTag::Identical) {
        // the shared J-neighbor plays the extended clam hub
        std::vector<double> shared = n1[us[3]];
        double w = -1;
        for (double x : shared)
            if (x > jlo && x <= jhi) {
                w = x;
                break;
            }
        if (w < 0) {
            out.failed_stage = "identical-part route: no shared neighbor";
            return out;
        }
        Label qw = Q[(int)w - 1];
        TraceBuilder tb(g);
        std::vector<Label> ps, vs, ws;
        if (!build_columns(tb, ps, vs, ws, {qw})) {
            out.failed_stage = "identical-part route: column assembly";
            return out;
        }
        auto r = ext_clam_chain(std::move(tb), ps, vs, ws, qw, cfg.t2, cfg.root2, n);
        if (r.ok()) return r;
        out.failed_stage = "identical-part route: " + r.failed_stage;
        return out;
    }

    {
        // increasing or decreasing: the J-arc becomes the ladder's free path
        std::vector<Label> jarc;
        for (size_t x = 1; x <= Q.size(); ++x)
            if ((double)x > jlo && (double)x <= jhi) jarc.push_back(Q[x - 1]);
        if (jarc.empty()) {
            out.failed_stage = "ordered-part route: empty free arc";
            return out;
        }
        if (jtag == SeqTag::Decreasing) std::reverse(jarc.begin(), jarc.end());
        TraceBuilder tb(g);
        std::vector<Label> ps, vs, ws;
        if (!build_columns(tb, ps, vs, ws, jarc)) {
            out.failed_stage = "ordered-part route: column assembly";
            return out;
        }
        // assemble ladder roles: anchors from the first free-arc neighbor of
        // each v role
        LadderRoles R;
        R.ps = ps;
        R.qs = jarc;
        R.vs = vs;
        R.ws = ws;
        R.ss = cfg.t2;
        R.root = cfg.root2;
        std::map<Label, int> qpos;
        for (size_t i = 0; i < jarc.size(); ++i) qpos[jarc[i]] = (int)i + 1;
        int prev = 0;
        for (const auto& v : vs) {
            int first = -1;
            for (const auto& x : tb.current().neighbors(v))
                if (qpos.count(x)) first = first < 0 ? qpos[x] : std::min(first, qpos[x]);
            if (first <= prev) {
                out.failed_stage = "ordered-part route: anchors not increasing";
                return out;
            }
            R.anchors.push_back(first);
            prev = first;
        }
        R.anchors.push_back((int)jarc.size() + 1);
        auto r = n_ext_ladder_chain(tb.current(), R, n);
        if (!r.ok()) {
            out.failed_stage = "ordered-part route: " + r.failed_stage;
            return out;
        }
        tb.append(*r.trace);
        out.trace = tb.finish();
        return out;
    }
}

}  // namespace vmc

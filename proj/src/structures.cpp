#include "vmc/structures.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace vmc {

namespace {

Label lab(const char* p, int i) { return std::string(p) + std::to_string(i); }

struct TailPart {
    std::vector<Label> s_vertices;
    Label root;
};

// attach the tail to the given structure vertices (each must get >= 1 neighbor in S)
TailPart add_tail(GraphBuilder& b, const std::vector<Label>& attach_to, const TailSpec& tail) {
    TailPart out;
    if (tail.kind == TailSpec::Kind::Star) {
        out.s_vertices = {"z"};
        out.root = "z";
        for (const auto& u : attach_to) b.add_edge(u, "z");
        return out;
    }
    out.s_vertices = tail.vertices;
    out.root = tail.root;
    for (const auto& v : tail.vertices) b.add_vertex(v);
    for (const auto& [x, y] : tail.edges) b.add_edge(x, y);
    for (const auto& [u, s] : tail.attachments) b.add_edge(u, s);
    return out;
}

void expect_edge(const Graph& g, const Label& a, const Label& b, bool want,
                 const std::string& clause, std::vector<std::string>& out) {
    if (!g.has_vertex(a) || !g.has_vertex(b)) {
        out.push_back("missing vertex for clause: " + clause);
        return;
    }
    if (g.adjacent(a, b) != want)
        out.push_back(clause + " (" + a + (want ? " !~ " : " ~ ") + b + ")");
}

void expect_vertex(const Graph& g, const Label& v, std::vector<std::string>& out) {
    if (!g.has_vertex(v)) out.push_back("missing vertex " + v);
}

std::vector<Label> tail_labels(const TailSpec& t) {
    if (t.kind == TailSpec::Kind::Star) return {"z"};
    return t.vertices;
}

Label tail_root(const TailSpec& t) {
    if (t.kind == TailSpec::Kind::Star) return "z";
    return t.root;
}

// the root-path condition: for every v in N(U) ∩ S there is a path from v to
// the root inside G[S] avoiding every other N(U) vertex
void check_root_path(const Graph& g, const std::vector<Label>& u_set,
                     const std::vector<Label>& s_set, const Label& root,
                     std::vector<std::string>& out) {
    std::set<Label> s_all(s_set.begin(), s_set.end());
    if (!s_all.count(root)) {
        out.push_back("root is not in the attached part");
        return;
    }
    std::set<Label> nu;
    for (const auto& u : u_set)
        for (const auto& x : g.neighbors(u))
            if (s_all.count(x)) nu.insert(x);
    for (const auto& v : nu) {
        std::vector<Label> keep;
        for (const auto& s : s_set)
            if (s == v || s == root || !nu.count(s)) keep.push_back(s);
        Graph sub = g.induced(keep);
        auto dist = sub.bfs_distances(sub.index_of(v));
        if (dist[sub.index_of(root)] < 0)
            out.push_back("no root path from " + v + " avoiding other attachment neighbors");
    }
}

// every pair within `set` non-adjacent
void check_independent(const Graph& g, const std::vector<Label>& set, const std::string& name,
                       std::vector<std::string>& out) {
    for (size_t i = 0; i < set.size(); ++i)
        for (size_t j = i + 1; j < set.size(); ++j)
            if (g.adjacent(set[i], set[j]))
                out.push_back(name + " is not independent (" + set[i] + " ~ " + set[j] + ")");
}

void check_exact_vertex_set(const Graph& g, std::vector<Label> expect,
                            std::vector<std::string>& out) {
    std::sort(expect.begin(), expect.end(), label_less);
    if (g.labels() != expect) out.push_back("vertex set differs from the specified structure");
}

}  // namespace

// ---------------------------------------------------------------------------
// makers
// ---------------------------------------------------------------------------

static MadeStructure make_drum(int n) {
    if (n < 3) throw input_error("drum: order must be >= 3");
    GraphBuilder b;
    MadeStructure m;
    for (int i = 1; i < n; ++i) b.add_edge(lab("v", i), lab("v", i + 1));
    for (int i = 1; i <= n; ++i) {
        b.add_edge(lab("w", i), lab("w", i % n + 1));
        b.add_edge(lab("u", i), lab("v", i));
        b.add_edge(lab("u", i), lab("w", i));
        m.roles[lab("v", i)] = "path";
        m.roles[lab("w", i)] = "rim";
        m.roles[lab("u", i)] = "spoke";
    }
    m.graph = b.build();
    return m;
}

static MadeStructure make_clam(int total, bool h1h2) {
    if (total < 4 || total % 3 != 1) throw input_error("clam: order must be 1 mod 3 and >= 4");
    int mpath = total - 2;
    GraphBuilder b;
    MadeStructure m;
    for (int i = 1; i < mpath; ++i) b.add_edge(lab("v", i), lab("v", i + 1));
    for (int i = 1; i <= mpath; ++i) {
        b.add_edge("h1", lab("v", i));
        if (i > 1 && i < mpath && i % 3 != 0) b.add_edge("h2", lab("v", i));
        m.roles[lab("v", i)] = "path";
    }
    b.add_vertex("h2");
    if (h1h2) b.add_edge("h1", "h2");
    m.roles["h1"] = "hub";
    m.roles["h2"] = "hub";
    m.graph = b.build();
    return m;
}

static MadeStructure make_hanging_ladder(int n) {
    if (n < 1) throw input_error("hanging ladder: order must be >= 1");
    int mp = 3 * n + 2;
    GraphBuilder b;
    MadeStructure m;
    for (int i = 1; i < mp; ++i) {
        b.add_edge(lab("v", i), lab("v", i + 1));
        b.add_edge(lab("w", i), lab("w", i + 1));
    }
    for (int i = 1; i <= mp; ++i) {
        b.add_edge(lab("v", i), lab("w", i));
        if (i > 1 && i < mp && i % 3 != 0) {
            b.add_edge("c", lab("v", i));
            b.add_edge("c", lab("w", i));
        }
        m.roles[lab("v", i)] = "path";
        m.roles[lab("w", i)] = "path";
    }
    m.roles["c"] = "hub";
    m.graph = b.build();
    return m;
}

static MadeStructure make_extended_drum(int n, const TailSpec& tail) {
    if (n < 3) throw input_error("extended drum: order must be >= 3");
    GraphBuilder b;
    MadeStructure m;
    std::vector<Label> us;
    for (int i = 1; i <= n; ++i) {
        b.add_edge(lab("w", i), lab("w", i % n + 1));
        b.add_edge(lab("u", i), lab("w", i));
        us.push_back(lab("u", i));
        m.roles[lab("w", i)] = "rim";
        m.roles[lab("u", i)] = "spoke";
    }
    auto t = add_tail(b, us, tail);
    for (const auto& s : t.s_vertices) m.roles[s] = s == t.root ? "root" : "tail";
    m.graph = b.build();
    return m;
}

static void clam_skeleton(GraphBuilder& b, MadeStructure& m, int n) {
    for (int i = 1; i < 2 * n; ++i) b.add_edge(lab("p", i), lab("p", i + 1));
    for (int i = 1; i <= n; ++i) {
        b.add_edge(lab("v", i), lab("p", 2 * i - 1));
        b.add_edge(lab("w", i), lab("p", 2 * i));
        b.add_edge("h", lab("v", i));
        m.roles[lab("v", i)] = "spoke";
        m.roles[lab("w", i)] = "spoke";
    }
    for (int i = 1; i <= 2 * n; ++i) m.roles[lab("p", i)] = "path";
    m.roles["h"] = "hub";
}

static MadeStructure make_extended_clam(int n, const TailSpec& tail) {
    if (n < 1) throw input_error("extended clam: order must be >= 1");
    GraphBuilder b;
    MadeStructure m;
    clam_skeleton(b, m, n);
    std::vector<Label> ws;
    for (int i = 1; i <= n; ++i) ws.push_back(lab("w", i));
    auto t = add_tail(b, ws, tail);
    for (const auto& s : t.s_vertices) m.roles[s] = s == t.root ? "root" : "tail";
    m.graph = b.build();
    return m;
}

static MadeStructure make_simple_extended_clam(int n) {
    if (n < 1) throw input_error("simple extended clam: order must be >= 1");
    GraphBuilder b;
    MadeStructure m;
    clam_skeleton(b, m, n);
    for (int i = 1; i <= n; ++i) {
        b.add_edge("h", lab("w", i));
        b.add_edge("z", lab("w", i));
    }
    m.roles["z"] = "root";
    m.graph = b.build();
    return m;
}

static void ladder_skeleton(GraphBuilder& b, MadeStructure& m, int n, int r) {
    for (int i = 1; i < 2 * n; ++i) b.add_edge(lab("p", i), lab("p", i + 1));
    for (int i = 1; i < r; ++i) b.add_edge(lab("q", i), lab("q", i + 1));
    if (r == 1) b.add_vertex(lab("q", 1));
    for (int i = 1; i <= n; ++i) {
        b.add_edge(lab("v", i), lab("p", 2 * i - 1));
        b.add_edge(lab("w", i), lab("p", 2 * i));
        m.roles[lab("v", i)] = "spoke";
        m.roles[lab("w", i)] = "spoke";
    }
    for (int i = 1; i <= 2 * n; ++i) m.roles[lab("p", i)] = "path";
    for (int i = 1; i <= r; ++i) m.roles[lab("q", i)] = "path";
}

static MadeStructure make_simple_extended_ladder(int n, const TailSpec& tail) {
    if (n < 1) throw input_error("simple extended hanging ladder: order must be >= 1");
    GraphBuilder b;
    MadeStructure m;
    ladder_skeleton(b, m, n, 2 * n);
    std::vector<Label> ws;
    for (int i = 1; i <= n; ++i) {
        b.add_edge(lab("v", i), lab("q", 2 * i - 1));
        b.add_edge(lab("w", i), lab("q", 2 * i));
        ws.push_back(lab("w", i));
    }
    auto t = add_tail(b, ws, tail);
    for (const auto& s : t.s_vertices) m.roles[s] = s == t.root ? "root" : "tail";
    m.graph = b.build();
    return m;
}

static MadeStructure make_n_extended_ladder(const StructureSpec& spec) {
    int n = spec.order;
    if (n < 1) throw input_error("n-extended hanging ladder: order must be >= 1");
    if (spec.q_len == 0) {
        // default to the simple variant
        StructureSpec simple = spec;
        return make_simple_extended_ladder(n, spec.tail);
    }
    int r = spec.q_len;
    if ((int)spec.anchors.size() != n + 1 || spec.anchors[n] != r + 1)
        throw input_error("n-extended ladder: anchors must be b_1..b_n, b_{n+1}=r+1");
    for (int i = 0; i + 1 <= n; ++i)
        if (spec.anchors[i] < 1 || spec.anchors[i] >= spec.anchors[i + 1])
            throw input_error("n-extended ladder: anchors must be strictly increasing");
    GraphBuilder b;
    MadeStructure m;
    ladder_skeleton(b, m, n, r);
    for (int i = 1; i <= n; ++i) {
        b.add_edge(lab("v", i), lab("q", spec.anchors[i - 1]));
        if ((int)spec.v_q_extra.size() >= i)
            for (int x : spec.v_q_extra[i - 1]) {
                if (x < spec.anchors[i - 1] || x >= spec.anchors[i])
                    throw input_error("n-extended ladder: v" + std::to_string(i) +
                                      " edge outside its anchor window");
                b.add_edge(lab("v", i), lab("q", x));
            }
        if ((int)spec.w_q.size() >= i) {
            int t = spec.t_param > 0 ? spec.t_param : n;
            if ((int)spec.w_q[i - 1].size() > t - 1)
                throw input_error("n-extended ladder: w" + std::to_string(i) +
                                  " exceeds its q-degree bound");
            for (int x : spec.w_q[i - 1]) {
                if (x < 1 || x > r) throw input_error("n-extended ladder: w edge out of range");
                b.add_edge(lab("w", i), lab("q", x));
            }
        }
    }
    std::vector<Label> ws;
    for (int i = 1; i <= n; ++i) ws.push_back(lab("w", i));
    auto t = add_tail(b, ws, spec.tail);
    for (const auto& s : t.s_vertices) m.roles[s] = s == t.root ? "root" : "tail";
    m.graph = b.build();
    return m;
}

MadeStructure make(const StructureSpec& spec) {
    switch (spec.kind) {
        case StructureKind::Drum: return make_drum(spec.order);
        case StructureKind::Clam: return make_clam(spec.order, spec.h1h2);
        case StructureKind::HangingLadder: return make_hanging_ladder(spec.order);
        case StructureKind::ExtendedDrum: return make_extended_drum(spec.order, spec.tail);
        case StructureKind::ExtendedClam: return make_extended_clam(spec.order, spec.tail);
        case StructureKind::SimpleExtendedClam: return make_simple_extended_clam(spec.order);
        case StructureKind::SimpleExtendedHangingLadder:
            return make_simple_extended_ladder(spec.order, spec.tail);
        case StructureKind::NExtendedHangingLadder: return make_n_extended_ladder(spec);
    }
    throw input_error("unknown structure kind");
}

// ---------------------------------------------------------------------------
// validators
// ---------------------------------------------------------------------------

static void validate_drum(const Graph& g, int n, std::vector<std::string>& out) {
    std::vector<Label> all;
    for (int i = 1; i <= n; ++i) {
        all.push_back(lab("v", i));
        all.push_back(lab("w", i));
        all.push_back(lab("u", i));
    }
    check_exact_vertex_set(g, all, out);
    if (!out.empty()) return;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            expect_edge(g, lab("v", i), lab("v", j), j == i + 1, "v path", out);
            bool cyc = j == i + 1 || (i == 1 && j == n);
            expect_edge(g, lab("w", i), lab("w", j), cyc, "w cycle", out);
            expect_edge(g, lab("u", i), lab("u", j), false, "u independent", out);
            expect_edge(g, lab("v", i), lab("w", j), false, "no v-w edges", out);
            expect_edge(g, lab("v", j), lab("w", i), false, "no v-w edges", out);
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            expect_edge(g, lab("u", i), lab("v", j), i == j, "u_i adjacent only to v_i and w_i",
                        out);
            expect_edge(g, lab("u", i), lab("w", j), i == j, "u_i adjacent only to v_i and w_i",
                        out);
        }
    expect_edge(g, lab("v", 1), lab("w", 1), false, "no v-w edges", out);
}

static void validate_clam(const Graph& g, int total, bool h1h2, std::vector<std::string>& out) {
    int mpath = total - 2;
    std::vector<Label> all{"h1", "h2"};
    for (int i = 1; i <= mpath; ++i) all.push_back(lab("v", i));
    check_exact_vertex_set(g, all, out);
    if (!out.empty()) return;
    for (int i = 1; i <= mpath; ++i) {
        for (int j = i + 1; j <= mpath; ++j)
            expect_edge(g, lab("v", i), lab("v", j), j == i + 1, "v path", out);
        expect_edge(g, "h1", lab("v", i), true, "h1 complete to the path", out);
        bool want = i > 1 && i < mpath && i % 3 != 0;
        expect_edge(g, "h2", lab("v", i), want, "h2 adjacency pattern", out);
    }
    expect_edge(g, "h1", "h2", h1h2, "h1-h2 edge flag", out);
}

static void validate_hanging_ladder(const Graph& g, int n, std::vector<std::string>& out) {
    int mp = 3 * n + 2;
    std::vector<Label> all{"c"};
    for (int i = 1; i <= mp; ++i) {
        all.push_back(lab("v", i));
        all.push_back(lab("w", i));
    }
    check_exact_vertex_set(g, all, out);
    if (!out.empty()) return;
    for (int i = 1; i <= mp; ++i)
        for (int j = i + 1; j <= mp; ++j) {
            expect_edge(g, lab("v", i), lab("v", j), j == i + 1, "v path", out);
            expect_edge(g, lab("w", i), lab("w", j), j == i + 1, "w path", out);
        }
    for (int i = 1; i <= mp; ++i)
        for (int j = 1; j <= mp; ++j)
            expect_edge(g, lab("v", i), lab("w", j), i == j, "rungs v_i ~ w_j iff i = j", out);
    for (int i = 1; i <= mp; ++i) {
        bool want = i > 1 && i < mp && i % 3 != 0;
        expect_edge(g, "c", lab("v", i), want, "hub adjacency pattern", out);
        expect_edge(g, "c", lab("w", i), want, "hub adjacency pattern", out);
    }
}

static void validate_extended_drum(const Graph& g, const StructureSpec& spec,
                                   std::vector<std::string>& out) {
    int n = spec.order;
    std::vector<Label> us, ws, ss = tail_labels(spec.tail);
    for (int i = 1; i <= n; ++i) {
        us.push_back(lab("u", i));
        ws.push_back(lab("w", i));
    }
    std::vector<Label> all = us;
    all.insert(all.end(), ws.begin(), ws.end());
    all.insert(all.end(), ss.begin(), ss.end());
    check_exact_vertex_set(g, all, out);
    if (!out.empty()) return;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            bool cyc = j == i + 1 || (i == 1 && j == n);
            expect_edge(g, lab("w", i), lab("w", j), cyc, "w cycle induced", out);
        }
    check_independent(g, us, "u set", out);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            expect_edge(g, lab("u", i), lab("w", j), i == j, "u_i ~ w_j iff i = j", out);
    for (const auto& u : us) {
        bool has = false;
        for (const auto& s : ss)
            if (g.adjacent(u, s)) has = true;
        if (!has) out.push_back(u + " has no neighbor in the attached part");
    }
    for (const auto& s : ss)
        for (const auto& w : ws)
            expect_edge(g, s, w, false, "no edges between the attached part and the cycle", out);
    check_root_path(g, us, ss, tail_root(spec.tail), out);
}

static void validate_extended_clam_common(const Graph& g, int n, const std::vector<Label>& ss,
                                          const Label& root, std::vector<std::string>& out) {
    std::vector<Label> vs, ws, ps;
    for (int i = 1; i <= n; ++i) {
        vs.push_back(lab("v", i));
        ws.push_back(lab("w", i));
    }
    for (int i = 1; i <= 2 * n; ++i) ps.push_back(lab("p", i));
    for (int i = 1; i <= 2 * n; ++i)
        for (int j = i + 1; j <= 2 * n; ++j)
            expect_edge(g, lab("p", i), lab("p", j), j == i + 1, "p path induced", out);
    std::vector<Label> vw = vs;
    vw.insert(vw.end(), ws.begin(), ws.end());
    check_independent(g, vw, "v/w set", out);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= 2 * n; ++j) {
            expect_edge(g, lab("v", i), lab("p", j), j == 2 * i - 1, "v_i ~ p_j iff j = 2i-1",
                        out);
            expect_edge(g, lab("w", i), lab("p", j), j == 2 * i, "w_i ~ p_j iff j = 2i", out);
        }
    for (const auto& v : vs) expect_edge(g, "h", v, true, "h complete to the v set", out);
    for (const auto& p : ps) expect_edge(g, "h", p, false, "h has no path neighbors", out);
    for (const auto& s : ss) expect_edge(g, "h", s, false, "h has no attached-part neighbors", out);
    for (const auto& w : ws) {
        bool has = false;
        for (const auto& s : ss)
            if (g.adjacent(w, s)) has = true;
        if (!has) out.push_back(w + " has no neighbor in the attached part");
    }
    for (const auto& s : ss) {
        for (const auto& v : vs)
            expect_edge(g, s, v, false, "no edges between the attached part and the v set", out);
        for (const auto& p : ps)
            expect_edge(g, s, p, false, "no edges between the attached part and the path", out);
    }
    check_root_path(g, ws, ss, root, out);
}

static void validate_extended_clam(const Graph& g, const StructureSpec& spec,
                                   std::vector<std::string>& out) {
    int n = spec.order;
    std::vector<Label> ss = tail_labels(spec.tail);
    std::vector<Label> all{"h"};
    for (int i = 1; i <= n; ++i) {
        all.push_back(lab("v", i));
        all.push_back(lab("w", i));
    }
    for (int i = 1; i <= 2 * n; ++i) all.push_back(lab("p", i));
    all.insert(all.end(), ss.begin(), ss.end());
    check_exact_vertex_set(g, all, out);
    if (!out.empty()) return;
    // h ~ w_i is deliberately unconstrained in the general kind
    validate_extended_clam_common(g, n, ss, tail_root(spec.tail), out);
}

static void validate_simple_extended_clam(const Graph& g, const StructureSpec& spec,
                                          std::vector<std::string>& out) {
    int n = spec.order;
    std::vector<Label> all{"h", "z"};
    for (int i = 1; i <= n; ++i) {
        all.push_back(lab("v", i));
        all.push_back(lab("w", i));
    }
    for (int i = 1; i <= 2 * n; ++i) all.push_back(lab("p", i));
    check_exact_vertex_set(g, all, out);
    if (!out.empty()) return;
    validate_extended_clam_common(g, n, {"z"}, "z", out);
    for (int i = 1; i <= n; ++i) {
        expect_edge(g, "z", lab("w", i), true, "z complete to the w set", out);
        expect_edge(g, "h", lab("w", i), true, "h complete to the w set", out);
    }
}

static void validate_ladder_common(const Graph& g, int n, int r, int t,
                                   const std::vector<int>& anchors,
                                   const std::vector<Label>& ss, const Label& root,
                                   std::vector<std::string>& out) {
    for (int i = 1; i <= 2 * n; ++i)
        for (int j = i + 1; j <= 2 * n; ++j)
            expect_edge(g, lab("p", i), lab("p", j), j == i + 1, "p path induced", out);
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j)
            expect_edge(g, lab("q", i), lab("q", j), j == i + 1, "q path induced", out);
    for (int i = 1; i <= 2 * n; ++i)
        for (int j = 1; j <= r; ++j)
            expect_edge(g, lab("p", i), lab("q", j), false, "no p-q edges", out);
    std::vector<Label> vw;
    for (int i = 1; i <= n; ++i) {
        vw.push_back(lab("v", i));
        vw.push_back(lab("w", i));
    }
    check_independent(g, vw, "v/w set", out);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= 2 * n; ++j) {
            expect_edge(g, lab("v", i), lab("p", j), j == 2 * i - 1, "v_i ~ p_j iff j = 2i-1",
                        out);
            expect_edge(g, lab("w", i), lab("p", j), j == 2 * i, "w_i ~ p_j iff j = 2i", out);
        }
    // anchor windows: v_i ~ q_{b_i}; no v_i edges outside [b_i, b_{i+1})
    for (int i = 1; i <= n; ++i) {
        if (!g.adjacent(lab("v", i), lab("q", anchors[i - 1])))
            out.push_back("v" + std::to_string(i) + " misses its anchor");
        for (int x = 1; x <= r; ++x)
            if (g.adjacent(lab("v", i), lab("q", x)) &&
                (x < anchors[i - 1] || x >= anchors[i]))
                out.push_back("v" + std::to_string(i) + " has a q-neighbor outside its window");
    }
    for (int i = 1; i <= n; ++i) {
        int qn = 0;
        for (int x = 1; x <= r; ++x)
            if (g.adjacent(lab("w", i), lab("q", x))) ++qn;
        if (qn > t - 1)
            out.push_back("w" + std::to_string(i) + " has more than t-1 q-neighbors");
        bool has = false;
        for (const auto& s : ss)
            if (g.adjacent(lab("w", i), s)) has = true;
        if (!has) out.push_back("w" + std::to_string(i) + " has no neighbor in the attached part");
    }
    for (const auto& s : ss) {
        for (int i = 1; i <= 2 * n; ++i)
            expect_edge(g, s, lab("p", i), false, "no edges attached part to p path", out);
        for (int i = 1; i <= r; ++i)
            expect_edge(g, s, lab("q", i), false, "no edges attached part to q path", out);
        for (int i = 1; i <= n; ++i)
            expect_edge(g, s, lab("v", i), false, "no edges attached part to v set", out);
    }
    std::vector<Label> ws;
    for (int i = 1; i <= n; ++i) ws.push_back(lab("w", i));
    check_root_path(g, ws, ss, root, out);
}

static void validate_ladder(const Graph& g, const StructureSpec& spec, bool simple,
                            std::vector<std::string>& out) {
    int n = spec.order;
    int r = simple ? 2 * n : spec.q_len;
    int t = simple ? 2 : (spec.t_param > 0 ? spec.t_param : n);
    std::vector<int> anchors;
    if (simple) {
        for (int i = 1; i <= n; ++i) anchors.push_back(2 * i - 1);
        anchors.push_back(r + 1);
    } else {
        anchors = spec.anchors;
        if ((int)anchors.size() != n + 1 || anchors[n] != r + 1) {
            out.push_back("anchor sequence malformed");
            return;
        }
    }
    std::vector<Label> ss = tail_labels(spec.tail);
    std::vector<Label> all;
    for (int i = 1; i <= n; ++i) {
        all.push_back(lab("v", i));
        all.push_back(lab("w", i));
    }
    for (int i = 1; i <= 2 * n; ++i) all.push_back(lab("p", i));
    for (int i = 1; i <= r; ++i) all.push_back(lab("q", i));
    all.insert(all.end(), ss.begin(), ss.end());
    check_exact_vertex_set(g, all, out);
    if (!out.empty()) return;
    validate_ladder_common(g, n, r, t, anchors, ss, tail_root(spec.tail), out);
    if (simple)
        for (int i = 1; i <= n; ++i)
            for (int x = 1; x <= r; ++x) {
                expect_edge(g, lab("v", i), lab("q", x), x == 2 * i - 1,
                            "simple variant: v_i ~ q_j iff j = 2i-1", out);
                expect_edge(g, lab("w", i), lab("q", x), x == 2 * i,
                            "simple variant: w_i ~ q_j iff j = 2i", out);
            }
}

std::vector<std::string> validate(const Graph& g, const StructureSpec& spec) {
    std::vector<std::string> out;
    switch (spec.kind) {
        case StructureKind::Drum: validate_drum(g, spec.order, out); break;
        case StructureKind::Clam: validate_clam(g, spec.order, spec.h1h2, out); break;
        case StructureKind::HangingLadder: validate_hanging_ladder(g, spec.order, out); break;
        case StructureKind::ExtendedDrum: validate_extended_drum(g, spec, out); break;
        case StructureKind::ExtendedClam: validate_extended_clam(g, spec, out); break;
        case StructureKind::SimpleExtendedClam: validate_simple_extended_clam(g, spec, out); break;
        case StructureKind::SimpleExtendedHangingLadder: validate_ladder(g, spec, true, out); break;
        case StructureKind::NExtendedHangingLadder:
            if (spec.q_len == 0) {
                validate_ladder(g, spec, true, out);
            } else {
                validate_ladder(g, spec, false, out);
            }
            break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// spec serialization
// ---------------------------------------------------------------------------

std::string kind_name(StructureKind k) {
    switch (k) {
        case StructureKind::Drum: return "drum";
        case StructureKind::Clam: return "clam";
        case StructureKind::HangingLadder: return "hanging-ladder";
        case StructureKind::ExtendedDrum: return "extended-drum";
        case StructureKind::ExtendedClam: return "extended-clam";
        case StructureKind::SimpleExtendedClam: return "simple-extended-clam";
        case StructureKind::SimpleExtendedHangingLadder: return "simple-extended-hanging-ladder";
        case StructureKind::NExtendedHangingLadder: return "n-extended-hanging-ladder";
    }
    return "?";
}

std::optional<StructureKind> kind_from_name(const std::string& name) {
    for (StructureKind k :
         {StructureKind::Drum, StructureKind::Clam, StructureKind::HangingLadder,
          StructureKind::ExtendedDrum, StructureKind::ExtendedClam,
          StructureKind::SimpleExtendedClam, StructureKind::SimpleExtendedHangingLadder,
          StructureKind::NExtendedHangingLadder})
        if (kind_name(k) == name) return k;
    return std::nullopt;
}

std::string structure_spec_to_json(const StructureSpec& spec) {
    nlohmann::json j;
    j["kind"] = kind_name(spec.kind);
    j["order"] = spec.order;
    if (spec.kind == StructureKind::Clam) j["h1h2"] = spec.h1h2;
    nlohmann::json tail;
    if (spec.tail.kind == TailSpec::Kind::Star) {
        tail["kind"] = "star";
    } else {
        tail["kind"] = "custom";
        tail["vertices"] = spec.tail.vertices;
        nlohmann::json es = nlohmann::json::array(), as = nlohmann::json::array();
        for (auto& [a, b] : spec.tail.edges) es.push_back({a, b});
        for (auto& [a, b] : spec.tail.attachments) as.push_back({a, b});
        tail["edges"] = es;
        tail["attachments"] = as;
        tail["root"] = spec.tail.root;
    }
    j["tail"] = tail;
    if (spec.kind == StructureKind::NExtendedHangingLadder && spec.q_len > 0) {
        j["t"] = spec.t_param;
        j["q_len"] = spec.q_len;
        j["anchors"] = spec.anchors;
        j["v_q_extra"] = spec.v_q_extra;
        j["w_q"] = spec.w_q;
    }
    return j.dump(2);
}

StructureSpec structure_spec_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    StructureSpec spec;
    auto k = kind_from_name(j.at("kind").get<std::string>());
    if (!k) throw input_error("unknown structure kind in spec");
    spec.kind = *k;
    spec.order = j.at("order").get<int>();
    if (j.contains("h1h2")) spec.h1h2 = j["h1h2"].get<bool>();
    if (j.contains("tail")) {
        auto& t = j["tail"];
        if (t.at("kind") == "custom") {
            spec.tail.kind = TailSpec::Kind::Custom;
            for (auto& v : t.at("vertices")) spec.tail.vertices.push_back(v.get<std::string>());
            for (auto& e : t.at("edges"))
                spec.tail.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
            for (auto& e : t.at("attachments"))
                spec.tail.attachments.emplace_back(e[0].get<std::string>(),
                                                   e[1].get<std::string>());
            spec.tail.root = t.at("root").get<std::string>();
        }
    }
    if (j.contains("q_len")) {
        spec.q_len = j["q_len"].get<int>();
        spec.t_param = j.value("t", 0);
        for (auto& a : j.at("anchors")) spec.anchors.push_back(a.get<int>());
        if (j.contains("v_q_extra"))
            for (auto& row : j["v_q_extra"])
                spec.v_q_extra.push_back(row.get<std::vector<int>>());
        if (j.contains("w_q"))
            for (auto& row : j["w_q"]) spec.w_q.push_back(row.get<std::vector<int>>());
    }
    return spec;
}

// ---------------------------------------------------------------------------
// patched cycles
// ---------------------------------------------------------------------------

bool patched_cycle_is_simple(const PatchedCycle& pc) {
    std::vector<Label> all;
    for (const auto& s : pc.patches) all.insert(all.end(), s.begin(), s.end());
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            if (pc.graph.adjacent(all[i], all[j])) return false;
    return true;
}

std::vector<std::string> validate_patched_cycle(const PatchedCycle& pc, bool require_simple) {
    std::vector<std::string> out;
    const Graph& g = pc.graph;
    if (!g.is_induced_cycle(pc.cycle)) out.push_back("q_1..q_m is not an induced cycle");
    size_t l = pc.anchors.size();
    for (const auto& s : pc.patches)
        if (s.size() != l) out.push_back("patch size differs from the anchor count");
    for (size_t j = 0; j + 1 < l; ++j)
        if (pc.anchors[j] >= pc.anchors[j + 1]) out.push_back("anchors not strictly increasing");
    if (!l) return out;
    if (pc.anchors.front() < 1 || pc.anchors.back() > (int)pc.cycle.size())
        out.push_back("anchor out of range");
    if (!out.empty()) return out;
    for (size_t i = 0; i < pc.patches.size(); ++i)
        for (size_t j = 0; j < l; ++j) {
            const Label& s = pc.patches[i][j];
            if (!g.has_vertex(s)) {
                out.push_back("missing patch vertex " + s);
                continue;
            }
            if (!g.adjacent(s, pc.cycle[pc.anchors[j] - 1]))
                out.push_back(s + " is not adjacent to its anchor");
            for (size_t x = j + 1; x < l; ++x)
                if (g.adjacent(s, pc.cycle[pc.anchors[x] - 1]))
                    out.push_back(s + " is adjacent to a later anchor");
        }
    if (require_simple && !patched_cycle_is_simple(pc))
        out.push_back("patch union is not independent");
    return out;
}

PatchedCycle make_patched_cycle(int w, int l, int m, const std::vector<int>& anchors,
                                const std::vector<std::pair<Label, Label>>& extra_edges) {
    if (l > m) throw input_error("patched cycle needs l <= m");
    if ((int)anchors.size() != l) throw input_error("anchor count must equal l");
    PatchedCycle pc;
    GraphBuilder b;
    for (int i = 1; i <= m; ++i) {
        b.add_edge(lab("q", i), lab("q", i % m + 1));
        pc.cycle.push_back(lab("q", i));
    }
    pc.anchors = anchors;
    for (int i = 1; i <= w; ++i) {
        std::vector<Label> patch;
        for (int j = 1; j <= l; ++j) {
            Label s = "s" + std::to_string(i) + "_" + std::to_string(j);
            b.add_edge(s, lab("q", anchors[j - 1]));
            patch.push_back(s);
        }
        pc.patches.push_back(std::move(patch));
    }
    for (const auto& [a, c] : extra_edges) b.add_edge(a, c);
    pc.graph = b.build();
    auto viol = validate_patched_cycle(pc, false);
    if (!viol.empty())
        throw input_error("extra edge violates the patched-cycle invariants: " + viol.front());
    return pc;
}

// ---------------------------------------------------------------------------
// levelings
// ---------------------------------------------------------------------------

Leveling bfs_leveling(const Graph& g, const Label& root) {
    if (!g.is_connected()) throw input_error("bfs_leveling: graph must be connected");
    auto dist = g.bfs_distances(g.index_of(root));
    int dmax = 0;
    for (int d : dist) dmax = std::max(dmax, d);
    Leveling lv;
    lv.levels.assign(dmax + 1, {});
    for (int i = 0; i < g.size(); ++i) lv.levels[dist[i]].push_back(g.label_at(i));
    return lv;
}

std::vector<std::string> validate_leveling(const Graph& g, const Leveling& lv) {
    std::vector<std::string> out;
    if (lv.levels.empty() || lv.levels[0].size() != 1) {
        out.push_back("level 0 must be a single vertex");
        return out;
    }
    std::map<Label, int> level_of;
    for (size_t i = 0; i < lv.levels.size(); ++i)
        for (const auto& v : lv.levels[i]) {
            if (level_of.count(v)) out.push_back("vertex in two levels: " + v);
            level_of[v] = (int)i;
        }
    for (size_t i = 1; i < lv.levels.size(); ++i)
        for (const auto& v : lv.levels[i]) {
            bool has_prev = false;
            for (const auto& u : g.neighbors(v)) {
                auto it = level_of.find(u);
                if (it == level_of.end()) continue;
                if (it->second == (int)i - 1) has_prev = true;
                if (it->second <= (int)i - 2)
                    out.push_back(v + " has a neighbor two or more levels down");
            }
            if (!has_prev) out.push_back(v + " has no neighbor in the previous level");
        }
    return out;
}

}  // namespace vmc

#include "vmc/ramsey.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

namespace vmc {

// ---------------------------------------------------------------------------
// monotone / identical subsequences
// ---------------------------------------------------------------------------

namespace {

std::optional<std::vector<int>> extract_chain(const std::vector<double>& seq, int l,
                                              const std::function<bool(double, double)>& ok) {
    // suffix chain lengths, then a greedy earliest-index reconstruction
    int n = (int)seq.size();
    std::vector<int> suf(n, 1);
    for (int i = n - 1; i >= 0; --i)
        for (int j = i + 1; j < n; ++j)
            if (ok(seq[i], seq[j])) suf[i] = std::max(suf[i], suf[j] + 1);
    std::vector<int> out;
    int need = l, prev = -1;
    for (int i = 0; i < n && need > 0; ++i) {
        if (suf[i] < need) continue;
        if (prev >= 0 && !ok(seq[prev], seq[i])) continue;
        out.push_back(i);
        prev = i;
        --need;
    }
    if (need > 0) return std::nullopt;
    return out;
}

}  // namespace

std::optional<TaggedSubsequence> try_mono_or_identical(const std::vector<double>& seq, int l) {
    if (l <= 0) throw input_error("subsequence length must be positive");
    const std::function<bool(double, double)> eq = [](double a, double b) { return a == b; };
    const std::function<bool(double, double)> lt = [](double a, double b) { return a < b; };
    const std::function<bool(double, double)> gt = [](double a, double b) { return a > b; };
    struct Kind {
        SeqTag tag;
        const std::function<bool(double, double)>* ok;
    };
    const Kind kinds[3] = {{SeqTag::Identical, &eq}, {SeqTag::Increasing, &lt},
                           {SeqTag::Decreasing, &gt}};
    for (const auto& kind : kinds) {
        auto chain = extract_chain(seq, l, *kind.ok);
        if (chain) return TaggedSubsequence{std::move(*chain), kind.tag};
    }
    return std::nullopt;
}

TaggedSubsequence mono_or_identical_subsequence(const std::vector<double>& seq, int l) {
    long need = (long)(l - 1) * (l - 1) * (l - 1) + 1;
    if ((long)seq.size() < need)
        throw input_error("sequence shorter than the (l-1)^3+1 guarantee");
    auto r = try_mono_or_identical(seq, l);
    if (!r) throw input_error("internal: guarantee length did not yield a subsequence");
    return *r;
}

// ---------------------------------------------------------------------------
// regular partitions
// ---------------------------------------------------------------------------

namespace {

// values of set `si` inside (lo, hi]
std::vector<double> slice(const std::vector<double>& set, double lo, double hi) {
    std::vector<double> out;
    for (double x : set)
        if (x > lo && x <= hi) out.push_back(x);
    return out;
}

struct PartCheck {
    bool identical = false, increasing = false, decreasing = false;
    std::string reason;
    bool ok() const { return identical || increasing || decreasing; }
    bool holds(SeqTag t) const {
        switch (t) {
            case SeqTag::Identical: return identical;
            case SeqTag::Increasing: return increasing;
            case SeqTag::Decreasing: return decreasing;
        }
        return false;
    }
    SeqTag preferred() const {
        if (identical) return SeqTag::Identical;
        return increasing ? SeqTag::Increasing : SeqTag::Decreasing;
    }
};

PartCheck check_part(const std::vector<std::vector<double>>& sets, const std::vector<int>& chosen,
                     double lo, double hi) {
    PartCheck out;
    std::vector<std::vector<double>> pieces;
    for (int i : chosen) pieces.push_back(slice(sets[i], lo, hi));
    for (const auto& p : pieces)
        if (p.empty()) {
            out.reason = "empty intersection";
            return out;
        }
    out.identical = true;
    for (size_t i = 1; i < pieces.size() && out.identical; ++i)
        if (pieces[i] != pieces[0]) out.identical = false;
    size_t sz = pieces[0].size();
    bool same_size = true;
    for (const auto& p : pieces)
        if (p.size() != sz) same_size = false;
    if (same_size) {
        out.increasing = out.decreasing = true;
        for (size_t i = 0; i + 1 < pieces.size(); ++i) {
            if (!(pieces[i].back() < pieces[i + 1].front())) out.increasing = false;
            if (!(pieces[i + 1].back() < pieces[i].front())) out.decreasing = false;
        }
    }
    if (!out.ok()) out.reason = "not identical, increasing, or decreasing";
    return out;
}

}  // namespace

std::vector<PartitionViolation> validate_regular_partition(
    const std::vector<std::vector<double>>& sets, const RegularPartition& rp) {
    std::vector<PartitionViolation> out;
    const double inf = std::numeric_limits<double>::infinity();
    for (size_t i = 1; i < rp.chosen.size(); ++i)
        if (rp.chosen[i] <= rp.chosen[i - 1]) out.push_back({-1, "chosen not increasing"});
    for (int i : rp.chosen)
        if (i < 0 || i >= (int)sets.size()) out.push_back({-1, "chosen index out of range"});
    if ((int)rp.case_tags.size() != rp.parts()) out.push_back({-1, "tag count mismatch"});
    if (!out.empty()) return out;
    std::vector<std::vector<double>> sorted_sets = sets;
    for (auto& s : sorted_sets) std::sort(s.begin(), s.end());
    for (int p = 0; p < rp.parts(); ++p) {
        double lo = p == 0 ? -inf : rp.cuts[p - 1];
        double hi = p == rp.parts() - 1 ? inf : rp.cuts[p];
        auto chk = check_part(sorted_sets, rp.chosen, lo, hi);
        if (!chk.ok())
            out.push_back({p, chk.reason});
        else if (!chk.holds(rp.case_tags[p]))
            out.push_back({p, "claimed case does not hold"});
    }
    return out;
}

namespace {

// Recursive solver following the splitting proof. Works on lists of input
// indices; every listed set meets (lo, hi] in the same number of points.
// Returns the chosen indices (in list order) and the interior cut points.
struct RegSolver {
    const std::vector<std::vector<double>>* sets;
    long nodes = 0;
    static constexpr long node_budget = 2000000;

    struct Sub {
        std::vector<int> chosen;   // input indices, in the order of the given list
        std::vector<double> cuts;  // interior cuts, ascending
    };

    std::vector<double> vals(int idx, double lo, double hi) const {
        return slice((*sets)[idx], lo, hi);
    }

    static std::optional<double> cut_between(double u, double v) {
        double x = u + (v - u) / 2.0;
        if (!(x > u) || !(x < v)) return std::nullopt;
        return x;
    }

    std::optional<Sub> solve(const std::vector<int>& view, double lo, double hi, int l) {
        if (++nodes > node_budget) return std::nullopt;
        if (l <= 0 || (int)view.size() < l) return std::nullopt;
        const int kk = (int)vals(view[0], lo, hi).size();
        if (kk == 0) return std::nullopt;
        if (l == 1) return Sub{{view[0]}, {}};  // {(lo,hi]} is regular for one set
        if (kk == 1) {
            std::vector<double> seq;
            for (int idx : view) seq.push_back(vals(idx, lo, hi)[0]);
            auto r = try_mono_or_identical(seq, l);
            if (!r) return std::nullopt;
            Sub out;
            for (int p : r->indices) out.chosen.push_back(view[p]);
            return out;
        }

        // Erdos-Szekeres sweeps: keep the longest weakly monotone subsequence
        // on each coordinate in turn
        std::vector<int> W = view;
        auto coord = [&](int idx, int c) { return vals(idx, lo, hi)[c]; };
        for (int c = 0; c < kk; ++c) {
            auto longest = [&](bool nondecr) {
                std::vector<int> dp(W.size(), 1), par(W.size(), -1);
                int best = 0;
                for (size_t i = 0; i < W.size(); ++i) {
                    for (size_t j = 0; j < i; ++j) {
                        double a = coord(W[j], c), b = coord(W[i], c);
                        if ((nondecr ? a <= b : a >= b) && dp[j] + 1 > dp[i]) {
                            dp[i] = dp[j] + 1;
                            par[i] = (int)j;
                        }
                    }
                    if (dp[i] > dp[best]) best = (int)i;
                }
                std::vector<int> out;
                for (int i = best; i >= 0; i = par[i]) out.push_back(W[i]);
                std::reverse(out.begin(), out.end());
                return out;
            };
            auto up = longest(true), down = longest(false);
            W = up.size() >= down.size() ? up : down;
        }
        if ((int)W.size() < l) return std::nullopt;

        // window split: a run W[s..s2] whose sets all split at one point x into
        // a fixed number of low and high elements
        const int len = (int)W.size();
        int bs = -1, bs2 = -1;
        double bx = 0;
        for (int j = 0; j + 1 < kk; ++j)
            for (int s = 0; s < len; ++s) {
                double mx = coord(W[s], j), mn = coord(W[s], j + 1);
                for (int s2 = s + 1; s2 < len; ++s2) {
                    mx = std::max(mx, coord(W[s2], j));
                    mn = std::min(mn, coord(W[s2], j + 1));
                    if (!(mx < mn)) break;
                    if (s2 - s > bs2 - bs || bs < 0) {
                        auto x = cut_between(mx, mn);
                        if (x) {
                            bs = s;
                            bs2 = s2;
                            bx = *x;
                        }
                    }
                }
            }
        if (bs >= 0) {
            std::vector<int> window(W.begin() + bs, W.begin() + bs2 + 1);
            for (int d = (int)window.size(); d >= l; --d) {
                auto left = solve(window, lo, bx, d);
                if (!left) continue;
                auto right = solve(left->chosen, bx, hi, l);
                if (!right) continue;
                Sub out;
                out.chosen = right->chosen;
                out.cuts = left->cuts;
                out.cuts.push_back(bx);
                out.cuts.insert(out.cuts.end(), right->cuts.begin(), right->cuts.end());
                return out;
            }
        }

        // dominating chain: single part where whole sets appear in increasing
        // or decreasing blocks
        for (bool fwd : {true, false}) {
            std::vector<int> dp(W.size(), 1), par(W.size(), -1);
            int best = 0;
            for (size_t i = 0; i < W.size(); ++i) {
                for (size_t j = 0; j < i; ++j) {
                    bool ok = fwd ? coord(W[j], kk - 1) < coord(W[i], 0)
                                  : coord(W[i], kk - 1) < coord(W[j], 0);
                    if (ok && dp[j] + 1 > dp[i]) {
                        dp[i] = dp[j] + 1;
                        par[i] = (int)j;
                    }
                }
                if (dp[i] > dp[best]) best = (int)i;
            }
            if (dp[best] >= l) {
                std::vector<int> chain;
                for (int i = best; i >= 0; i = par[i]) chain.push_back(W[i]);
                std::reverse(chain.begin(), chain.end());
                chain.resize(l);
                return Sub{chain, {}};
            }
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<RegularPartition> regular_partition(const std::vector<std::vector<double>>& sets,
                                                  int k, int l) {
    if (k <= 0 || l <= 0) throw input_error("regular_partition: k and l must be positive");
    std::vector<std::vector<double>> sorted_sets = sets;
    for (auto& s : sorted_sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if ((int)s.size() != k) throw input_error("regular_partition: set is not k distinct reals");
    }
    RegSolver solver{&sorted_sets};
    std::vector<int> view(sets.size());
    for (size_t i = 0; i < sets.size(); ++i) view[i] = (int)i;
    const double inf = std::numeric_limits<double>::infinity();
    auto sub = solver.solve(view, -inf, inf, l);
    if (!sub) return std::nullopt;
    RegularPartition rp;
    rp.chosen = sub->chosen;
    std::sort(rp.chosen.begin(), rp.chosen.end());
    rp.cuts = sub->cuts;
    std::sort(rp.cuts.begin(), rp.cuts.end());
    // tags are recomputed from the authoritative per-part check
    rp.case_tags.assign(rp.parts(), SeqTag::Identical);
    for (int p = 0; p < rp.parts(); ++p) {
        double lo = p == 0 ? -inf : rp.cuts[p - 1];
        double hi = p == rp.parts() - 1 ? inf : rp.cuts[p];
        auto chk = check_part(sorted_sets, rp.chosen, lo, hi);
        if (!chk.ok()) return std::nullopt;
        rp.case_tags[p] = chk.preferred();
    }
    if (rp.parts() > k) return std::nullopt;
    if (!validate_regular_partition(sets, rp).empty()) return std::nullopt;
    return rp;
}

std::optional<RegularPartition> regular_partition_at_most(
    const std::vector<std::vector<double>>& sets, int k, int l) {
    if (k <= 0 || l <= 0) throw input_error("regular_partition: k and l must be positive");
    // bucket indices by cardinality; try largest buckets first
    std::map<size_t, std::vector<int>> buckets;
    for (size_t i = 0; i < sets.size(); ++i) {
        std::vector<double> s = sets[i];
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if ((int)s.size() > k) throw input_error("regular_partition: set larger than k");
        if (!s.empty()) buckets[s.size()].push_back((int)i);
    }
    std::vector<std::pair<size_t, std::vector<int>>> order(buckets.begin(), buckets.end());
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.second.size() != b.second.size()) return a.second.size() > b.second.size();
        return a.first < b.first;
    });
    for (const auto& [card, idxs] : order) {
        if ((int)idxs.size() < l) continue;
        std::vector<std::vector<double>> subset;
        for (int i : idxs) subset.push_back(sets[i]);
        auto rp = regular_partition(subset, (int)card, l);
        if (!rp) continue;
        for (auto& c : rp->chosen) c = idxs[c];
        return rp;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// bound formulas
// ---------------------------------------------------------------------------

RegularPartitionBounds regular_partition_bounds(uint64_t n, const BigCount& l) {
    if (n == 0 || l < BigCount(1)) throw input_error("bounds need n, l >= 1");
    const BigCount one(1);
    if (n == 1) {
        BigCount lm1 = l - one;
        return {l, /*M unused at n=1; keep the defining formula*/
                (l - one) * (l - one) * BigCount(1) + one, lm1.pow(3) + one};
    }
    BigCount t(0);
    for (uint64_t i = 1; i < n; ++i) {
        auto inner = regular_partition_bounds(n - i, l);
        auto outer = regular_partition_bounds(i, inner.N);
        if (outer.N > t) t = outer.N;
    }
    BigCount M = (t - one) * (l - one) * BigCount(n) + one;
    if (n > 40) throw resource_error("bounds: exponent too large");
    BigCount N = (M - one).pow(uint64_t(1) << n) + one;
    return {t, M, N};
}

BigCount n_prime(uint64_t k, const BigCount& l) {
    return regular_partition_bounds(k, BigCount(k + 1) * l).N;
}

RamseyBound ramsey_diagonal(uint64_t n) {
    switch (n) {
        case 1: return {BigCount(1), true};
        case 2: return {BigCount(2), true};
        case 3: return {BigCount(6), true};
        case 4: return {BigCount(18), true};
        default:
            if (n < 1) throw input_error("ramsey_diagonal: n >= 1");
            return {binomial(2 * n - 2, n - 1), false};
    }
}

MuInfo mu_info(uint64_t n) {
    if (n < 2) throw input_error("mu: n >= 2");
    auto r = ramsey_diagonal(n);
    BigCount v = BigCount(n - 1) * (r.value.pow(2 * n - 3) + BigCount(1));
    return {v, !r.exact};
}

BigCount mu(uint64_t n) { return mu_info(n).value; }

LadderBounds ell_bound(uint64_t n) {
    if (n < 3) throw input_error("ell_bound: n >= 3");
    LadderBounds b;
    auto m1i = mu_info(n);
    auto m3i = mu_info(2 * n + 2);
    b.m1 = m1i.value;
    b.m2 = BigCount(8 * n);
    b.m3 = m3i.value;
    b.m4 = b.m1 + BigCount(2) * (b.m2 - BigCount(1)) * BigCount(n - 2) + BigCount(4);
    // (m4 + m1)/2 is integral: m4 + m1 = 2*(m1 + (m2-1)(n-2) + 2)
    BigCount half = b.m1 + (b.m2 - BigCount(1)) * BigCount(n - 2) + BigCount(2);
    b.L = (b.m3 - BigCount(1)) * b.m4 + half;
    b.used_binomial = m1i.used_binomial || m3i.used_binomial;
    return b;
}

ConfigBounds m_bound(uint64_t n) {
    if (n < 3) throw input_error("m_bound: n >= 3");
    ConfigBounds c;
    BigCount L = ell_bound(n).L;
    c.M1 = BigCount(n - 1) * (BigCount(4) * L + BigCount(6));
    c.M2 = BigCount(n - 1) * n_prime(n - 1, c.M1);
    c.M = n_prime(n - 1, c.M2);
    return c;
}

// ---------------------------------------------------------------------------
// combinatorial searches
// ---------------------------------------------------------------------------

namespace {

std::optional<std::vector<int>> find_homogeneous(const Graph& g, const std::vector<int>& allowed,
                                                 int n, bool clique) {
    std::vector<int> cand = allowed;
    std::sort(cand.begin(), cand.end());
    std::vector<int> cur;
    std::function<bool(size_t)> dfs = [&](size_t from) -> bool {
        if ((int)cur.size() == n) return true;
        for (size_t i = from; i < cand.size(); ++i) {
            int v = cand[i];
            bool ok = true;
            for (int u : cur)
                if (g.adj(u, v) != clique) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            if (cand.size() - i < (size_t)(n - (int)cur.size())) return false;
            cur.push_back(v);
            if (dfs(i + 1)) return true;
            cur.pop_back();
        }
        return false;
    };
    if (dfs(0)) return cur;
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> find_clique(const Graph& g, const std::vector<int>& allowed,
                                            int n) {
    return find_homogeneous(g, allowed, n, true);
}

std::optional<std::vector<int>> find_independent_set(const Graph& g,
                                                     const std::vector<int>& allowed, int n) {
    return find_homogeneous(g, allowed, n, false);
}

GridResult rectangle_or_clique(const Graph& g, int m, int n, int a, int b, int k) {
    // expect labels "i,j" for 1<=i<=m, 1<=j<=n
    std::vector<std::vector<int>> cell(m + 1, std::vector<int>(n + 1, -1));
    if (g.size() != m * n) throw input_error("rectangle_or_clique: grid size mismatch");
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            Label lab = std::to_string(i) + "," + std::to_string(j);
            if (!g.has_vertex(lab)) throw input_error("rectangle_or_clique: missing vertex " + lab);
            cell[i][j] = g.index_of(lab);
        }
    GridResult out;
    // rectangle first: choose a rows, then a compatible clique of b columns
    std::vector<int> rows;
    std::function<bool(int)> choose_rows = [&](int from) -> bool {
        if ((int)rows.size() == a) {
            // columns where the chosen rows are pairwise independent
            std::vector<int> okcols;
            for (int j = 1; j <= n; ++j) {
                bool ok = true;
                for (size_t p = 0; p < rows.size() && ok; ++p)
                    for (size_t q = p + 1; q < rows.size() && ok; ++q)
                        if (g.adj(cell[rows[p]][j], cell[rows[q]][j])) ok = false;
                if (ok) okcols.push_back(j);
            }
            if ((int)okcols.size() < b) return false;
            // compatibility: all cross pairs independent
            auto compat = [&](int j1, int j2) {
                for (int r1 : rows)
                    for (int r2 : rows)
                        if (g.adj(cell[r1][j1], cell[r2][j2])) return false;
                return true;
            };
            std::vector<int> cols;
            std::function<bool(size_t)> choose_cols = [&](size_t from2) -> bool {
                if ((int)cols.size() == b) return true;
                for (size_t i = from2; i < okcols.size(); ++i) {
                    bool ok = true;
                    for (int c : cols)
                        if (!compat(c, okcols[i])) {
                            ok = false;
                            break;
                        }
                    if (!ok) continue;
                    cols.push_back(okcols[i]);
                    if (choose_cols(i + 1)) return true;
                    cols.pop_back();
                }
                return false;
            };
            if (choose_cols(0)) {
                out.kind = GridResult::Kind::Rectangle;
                out.rows = rows;
                out.cols = cols;
                return true;
            }
            return false;
        }
        for (int i = from; i <= m; ++i) {
            rows.push_back(i);
            if (choose_rows(i + 1)) return true;
            rows.pop_back();
        }
        return false;
    };
    if (a <= m && b <= n && choose_rows(1)) return out;
    // clique fallback
    std::vector<int> all(g.size());
    for (int i = 0; i < g.size(); ++i) all[i] = i;
    if (auto cl = find_clique(g, all, k)) {
        out.kind = GridResult::Kind::Clique;
        for (int v : *cl) out.clique.push_back(g.label_at(v));
        return out;
    }
    out.kind = GridResult::Kind::Failure;
    return out;
}

DegreeOrPath degree_or_induced_path(const Graph& g, int k, int l) {
    if (!g.is_connected()) throw input_error("degree_or_induced_path: graph must be connected");
    DegreeOrPath out;
    for (const auto& v : g.labels())
        if (g.degree(v) >= k) {
            out.kind = DegreeOrPath::Kind::Vertex;
            out.vertex = v;
            return out;
        }
    // backtracking search for an induced path on l vertices
    std::vector<int> cur;
    std::vector<char> used(g.size(), 0);
    std::function<bool()> dfs = [&]() -> bool {
        if ((int)cur.size() == l) return true;
        int last = cur.back();
        for (int v = 0; v < g.size(); ++v) {
            if (used[v] || !g.adj(last, v)) continue;
            bool ok = true;
            for (size_t i = 0; i + 1 < cur.size(); ++i)
                if (g.adj(cur[i], v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            used[v] = 1;
            cur.push_back(v);
            if (dfs()) return true;
            cur.pop_back();
            used[v] = 0;
        }
        return false;
    };
    for (int s = 0; s < g.size(); ++s) {
        cur = {s};
        std::fill(used.begin(), used.end(), 0);
        used[s] = 1;
        if (dfs()) {
            out.kind = DegreeOrPath::Kind::Path;
            for (int v : cur) out.path.push_back(g.label_at(v));
            return out;
        }
    }
    out.kind = DegreeOrPath::Kind::Failure;
    return out;
}

std::vector<std::pair<Label, Label>> induced_matching(const Graph& g,
                                                      const std::vector<Label>& side_a,
                                                      const std::vector<Label>& side_b, int n) {
    if (n <= 0) throw input_error("induced_matching: n must be positive");
    for (size_t i = 0; i < side_a.size(); ++i)
        for (size_t j = i + 1; j < side_a.size(); ++j)
            if (g.adjacent(side_a[i], side_a[j]))
                throw input_error("induced_matching: side A is not independent");
    for (size_t i = 0; i < side_b.size(); ++i)
        for (size_t j = i + 1; j < side_b.size(); ++j)
            if (g.adjacent(side_b[i], side_b[j]))
                throw input_error("induced_matching: side B is not independent");
    for (const auto& b : side_b) {
        int d = 0;
        for (const auto& a : side_a)
            if (g.adjacent(a, b)) ++d;
        if (d > n) throw input_error("induced_matching: B-vertex exceeds degree bound");
    }
    auto covered = [&](const std::vector<Label>& bs, const Label& a) {
        for (const auto& b : bs)
            if (g.adjacent(a, b)) return true;
        return false;
    };
    for (const auto& a : side_a)
        if (!covered(side_b, a)) throw input_error("induced_matching: A-vertex without neighbor");
    // minimal covering subset of B (greedy removal): each survivor then has a
    // private A-neighbor, and those pairs form an induced matching
    std::vector<Label> cover = side_b;
    std::sort(cover.begin(), cover.end(), label_less);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < cover.size(); ++i) {
            std::vector<Label> rest = cover;
            rest.erase(rest.begin() + i);
            bool still = true;
            for (const auto& a : side_a)
                if (!covered(rest, a)) {
                    still = false;
                    break;
                }
            if (still) {
                cover = std::move(rest);
                changed = true;
                break;
            }
        }
    }
    std::vector<std::pair<Label, Label>> matching;
    for (const auto& b : cover) {
        for (const auto& a : side_a) {
            if (!g.adjacent(a, b)) continue;
            bool priv = true;
            for (const auto& b2 : cover)
                if (b2 != b && g.adjacent(a, b2)) {
                    priv = false;
                    break;
                }
            if (priv) {
                matching.emplace_back(a, b);
                break;  // lowest private neighbor
            }
        }
    }
    std::sort(matching.begin(), matching.end(),
              [](const auto& x, const auto& y) { return label_less(x.first, y.first); });
    return matching;
}

CliqueOrIndependent clique_or_independent(const Graph& g, const std::vector<Label>& subset,
                                          int n) {
    std::vector<int> allowed;
    for (const auto& v : subset) allowed.push_back(g.index_of(v));
    CliqueOrIndependent out;
    if (auto cl = find_clique(g, allowed, n)) {
        out.kind = CliqueOrIndependent::Kind::Clique;
        for (int v : *cl) out.witness.push_back(g.label_at(v));
        return out;
    }
    if (auto is = find_independent_set(g, allowed, n)) {
        out.kind = CliqueOrIndependent::Kind::Independent;
        for (int v : *is) out.witness.push_back(g.label_at(v));
        return out;
    }
    out.kind = CliqueOrIndependent::Kind::Failure;
    return out;
}

}  // namespace vmc

#include <doctest.h>

#include <map>
#include <random>

#include "vmc/graph.hpp"
#include "vmc/graph_io.hpp"
#include "vmc/isomorphism.hpp"

using namespace vmc;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p = 0.5) {
    GraphBuilder b;
    for (int i = 1; i <= n; ++i) b.add_vertex(std::to_string(i));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (coin(rng) < p) b.add_edge(std::to_string(i), std::to_string(j));
    return b.build();
}

Graph relabeled(const Graph& g, std::mt19937& rng) {
    auto labs = g.labels();
    std::vector<Label> perm = labs;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<Label, Label>> edges;
    std::map<Label, Label> m;
    for (size_t i = 0; i < labs.size(); ++i) m[labs[i]] = "r" + perm[i];
    for (auto [a, b] : g.edges()) edges.emplace_back(m[a], m[b]);
    std::vector<Label> verts;
    for (const auto& l : labs) verts.push_back(m[l]);
    return Graph::from_edges(verts, edges);
}

}  // namespace

TEST_CASE("local complementation basics") {
    Graph p3 = Graph::from_edges({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    Graph t = p3.local_complement("b");
    CHECK(t.adjacent("a", "c"));
    CHECK(is_isomorphic(t, complete_graph(3)));

    // C5 * v adds the single chord between v's neighbors
    Graph c5 = cycle_graph(5);
    Graph h = c5.local_complement("1");
    CHECK(h.edge_count() == 6);
    CHECK(h.adjacent("2", "5"));

    CHECK_THROWS_AS(p3.local_complement("zzz"), input_error);
}

TEST_CASE("local complementation is an involution") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + (int)(rng() % 6);
        Graph g = random_graph(rng, n);
        for (const auto& v : g.labels())
            CHECK(g.local_complement(v).local_complement(v) == g);
    }
}

TEST_CASE("pivot: both definitions agree, symmetric in its arguments") {
    Graph p4 = path_graph(4);
    Graph piv = p4.pivot("2", "3");
    CHECK(piv == p4.pivot_by_lc("2", "3"));
    CHECK(is_isomorphic(piv, cycle_graph(4)));

    Graph k2 = complete_graph(2);
    CHECK(k2.pivot("1", "2") == k2);  // all three flip sets empty; swap is invisible

    CHECK_THROWS_AS(p4.pivot("1", "3"), input_error);

    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(rng, 2 + (int)(rng() % 5));
        for (auto [u, v] : g.edges()) {
            Graph a = g.pivot(u, v);
            CHECK(a == g.pivot_by_lc(u, v));
            CHECK(a == g.pivot(v, u));
            CHECK(a == g.local_complement(v).local_complement(u).local_complement(v));
        }
    }
}

TEST_CASE("smooth") {
    Graph c5 = cycle_graph(5);
    CHECK(is_isomorphic(c5.smooth("3"), cycle_graph(4)));
    Graph p3 = path_graph(3);
    Graph e = p3.smooth("2");
    CHECK(e.edge_count() == 1);
    CHECK(e.adjacent("1", "3"));
    // C6 smoothed at pairwise non-consecutive vertices gives C3
    Graph g = cycle_graph(6).smooth("2").smooth("4").smooth("6");
    CHECK(is_isomorphic(g, cycle_graph(3)));
    // neighbors adjacent -> rejected
    Graph k3 = complete_graph(3);
    CHECK_THROWS_AS(k3.smooth("1"), input_error);
    CHECK_THROWS_AS(c5.smooth("missing"), input_error);

    // smooth equals contracting an incident edge
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g2 = random_graph(rng, 3 + (int)(rng() % 5), 0.4);
        for (const auto& v : g2.labels()) {
            if (!g2.suppressible(v)) continue;
            auto nb = g2.neighbors(v);
            CHECK(is_isomorphic(g2.smooth(v), g2.contract_connected({v, nb[0]})));
            CHECK(is_isomorphic(g2.smooth(v), g2.contract_connected({v, nb[1]})));
        }
    }
}

TEST_CASE("delete and induced are complements") {
    Graph k4 = complete_graph(4);
    CHECK(is_isomorphic(k4.removed({"2"}), complete_graph(3)));
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph(rng, 6);
        CHECK(g.induced(g.labels()) == g);
        std::vector<Label> s{"1", "4"};
        std::vector<Label> rest;
        for (const auto& v : g.labels())
            if (v != "1" && v != "4") rest.push_back(v);
        CHECK(g.removed(s) == g.induced(rest));
    }
    Graph w5 = wheel_graph(5);
    CHECK(is_isomorphic(w5.removed({"h"}), cycle_graph(5)));
}

TEST_CASE("contract_connected") {
    Graph p5 = path_graph(5);
    CHECK(is_isomorphic(p5.contract_connected({"2", "3", "4"}), path_graph(3)));
    CHECK(p5.contract_connected({"3"}) == p5);
    Graph two = Graph::from_edges({"a", "b", "c"}, {{"a", "b"}});
    CHECK_THROWS_AS(two.contract_connected({"a", "c"}), input_error);
}

TEST_CASE("isomorphism") {
    std::mt19937 rng(31);
    CHECK(is_isomorphic(cycle_graph(5), cycle_graph(5)));
    // C6 vs 2xC3
    Graph twoc3 = Graph::from_edges({"a", "b", "c", "x", "y", "z"},
                                    {{"a", "b"}, {"b", "c"}, {"a", "c"},
                                     {"x", "y"}, {"y", "z"}, {"x", "z"}});
    CHECK_FALSE(is_isomorphic(cycle_graph(6), twoc3));
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = random_graph(rng, 3 + (int)(rng() % 6));
        Graph h = relabeled(g, rng);
        auto m = find_isomorphism(g, h);
        REQUIRE(m.has_value());
        for (auto [a, b] : g.edges()) {
            Label ma, mb;
            for (auto& [x, y] : *m) {
                if (x == a) ma = y;
                if (x == b) mb = y;
            }
            CHECK(h.adjacent(ma, mb));
        }
        CHECK(canonical_form(g) == canonical_form(h));
        // perturb one edge -> different graph
        auto labs = g.labels();
        if (labs.size() >= 2) {
            Graph g2 = g.adjacent(labs[0], labs[1]) ? g.without_edge(labs[0], labs[1])
                                                    : g.with_edge(labs[0], labs[1]);
            CHECK(is_isomorphic(g, g2) == (canonical_form(g) == canonical_form(g2)));
        }
    }
    // canonical form handles highly symmetric graphs
    CHECK(canonical_form(complete_graph(9)) == canonical_form(relabeled(complete_graph(9), rng)));
    CHECK(canonical_form(cycle_graph(12)) == canonical_form(relabeled(cycle_graph(12), rng)));
}

TEST_CASE("graph6 round trip") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_graph(rng, 1 + (int)(rng() % 14));
        std::string s = to_graph6(g);
        Graph h = from_graph6(s);
        CHECK(to_graph6(h) == s);
        CHECK(is_isomorphic(g, h));
    }
    // long form
    Graph big = path_graph(70);
    Graph back = from_graph6(to_graph6(big));
    CHECK(back.size() == 70);
    CHECK(is_isomorphic(back, big, 80));
    CHECK(to_graph6(back) == to_graph6(big));
    // known encodings: K3 is "Bw", P3 on labels 0,1,2 with edges 01,12 is "BW"
    CHECK(to_graph6(complete_graph(3)) == "Bw");
    CHECK_THROWS_AS(from_graph6("B"), input_error);
}

TEST_CASE("adjacency text and dot") {
    Graph g = Graph::from_edges({"hub", "a", "b"}, {{"hub", "a"}, {"hub", "b"}});
    Graph h = from_adjacency_text(to_adjacency_text(g));
    CHECK(h == g);
    std::string dot = to_dot(g);
    CHECK(dot.find("-- \"hub\"") != std::string::npos);
}

TEST_CASE("wheel graph shape") {
    Graph w5 = wheel_graph(5);
    CHECK(w5.size() == 6);
    CHECK(w5.degree("h") == 5);
    CHECK(is_isomorphic(w5.induced({"1", "2", "3", "4", "5"}), cycle_graph(5)));
    CHECK(is_isomorphic(wheel_graph(3), complete_graph(4)));
}

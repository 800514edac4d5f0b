#include <doctest.h>

#include <random>

#include "vmc/isomorphism.hpp"
#include "vmc/structures.hpp"

using namespace vmc;

TEST_CASE("make/validate round trip for every kind across small orders") {
    std::vector<StructureSpec> specs;
    for (int n = 3; n <= 9; ++n) specs.push_back({.kind = StructureKind::Drum, .order = n});
    for (int total = 7; total <= 16; total += 3)
        for (bool f : {false, true})
            specs.push_back({.kind = StructureKind::Clam, .order = total, .h1h2 = f});
    for (int n = 1; n <= 4; ++n)
        specs.push_back({.kind = StructureKind::HangingLadder, .order = n});
    for (int n = 3; n <= 6; ++n)
        specs.push_back({.kind = StructureKind::ExtendedDrum, .order = n});
    for (int n = 2; n <= 5; ++n)
        specs.push_back({.kind = StructureKind::ExtendedClam, .order = n});
    for (int n = 2; n <= 5; ++n)
        specs.push_back({.kind = StructureKind::SimpleExtendedClam, .order = n});
    for (int n = 2; n <= 5; ++n)
        specs.push_back({.kind = StructureKind::SimpleExtendedHangingLadder, .order = n});
    for (int n = 2; n <= 4; ++n)
        specs.push_back({.kind = StructureKind::NExtendedHangingLadder, .order = n});
    for (const auto& spec : specs) {
        auto m = make(spec);
        auto viol = validate(m.graph, spec);
        for (const auto& v : viol) {
            CAPTURE(kind_name(spec.kind));
            CAPTURE(spec.order);
            CAPTURE(v);
            CHECK(false);
        }
        CHECK((int)m.roles.size() == m.graph.size());
    }
}

TEST_CASE("vertex counts match the definitions") {
    for (int n = 3; n <= 8; ++n)
        CHECK(make({.kind = StructureKind::Drum, .order = n}).graph.size() == 3 * n);
    for (int n = 1; n <= 4; ++n)
        CHECK(make({.kind = StructureKind::HangingLadder, .order = n}).graph.size() == 6 * n + 5);
    for (int total = 7; total <= 13; total += 3)
        CHECK(make({.kind = StructureKind::Clam, .order = total}).graph.size() == total);
    // drum at n=5 has 15 vertices; hanging ladder n=2 has 17
    CHECK(make({.kind = StructureKind::Drum, .order = 5}).graph.size() == 15);
    CHECK(make({.kind = StructureKind::HangingLadder, .order = 2}).graph.size() == 17);
}

TEST_CASE("invalid parameters are input errors") {
    CHECK_THROWS_AS(make({.kind = StructureKind::Clam, .order = 9}), input_error);  // 9 % 3 != 1
    CHECK_THROWS_AS(make({.kind = StructureKind::Drum, .order = 2}), input_error);
}

TEST_CASE("validator names the failing clause") {
    StructureSpec spec{.kind = StructureKind::Drum, .order = 4};
    auto m = make(spec);
    // add a forbidden u-w cross edge
    Graph bad = m.graph.with_edge("u1", "w2");
    auto viol = validate(bad, spec);
    REQUIRE_FALSE(viol.empty());
    bool mentions = false;
    for (const auto& v : viol)
        if (v.find("u_i adjacent only to v_i and w_i") != std::string::npos) mentions = true;
    CHECK(mentions);
}

TEST_CASE("extended drum tails") {
    SUBCASE("default star tail") {
        StructureSpec spec{.kind = StructureKind::ExtendedDrum, .order = 4};
        auto m = make(spec);
        CHECK(m.graph.has_vertex("z"));
        CHECK(m.graph.degree("z") == 4);
        CHECK(validate(m.graph, spec).empty());
    }
    SUBCASE("custom tail satisfying the root-path condition") {
        StructureSpec spec{.kind = StructureKind::ExtendedDrum, .order = 3};
        spec.tail.kind = TailSpec::Kind::Custom;
        spec.tail.vertices = {"s1", "s2", "s3", "t1", "t2", "t3", "z"};
        spec.tail.edges = {{"s1", "t1"}, {"s2", "t2"}, {"s3", "t3"},
                           {"t1", "z"}, {"t2", "z"}, {"t3", "z"}};
        spec.tail.attachments = {{"u1", "s1"}, {"u2", "s2"}, {"u3", "s3"}};
        spec.tail.root = "z";
        auto m = make(spec);
        CHECK(validate(m.graph, spec).empty());
    }
    SUBCASE("tail violating the root-path condition is reported") {
        // chain s1-s2-s3 with all three attached: paths from s1 pass through s2
        StructureSpec spec{.kind = StructureKind::ExtendedDrum, .order = 3};
        spec.tail.kind = TailSpec::Kind::Custom;
        spec.tail.vertices = {"s1", "s2", "s3"};
        spec.tail.edges = {{"s1", "s2"}, {"s2", "s3"}};
        spec.tail.attachments = {{"u1", "s1"}, {"u2", "s2"}, {"u3", "s3"}};
        spec.tail.root = "s3";
        auto m = make(spec);
        auto viol = validate(m.graph, spec);
        bool mentions = false;
        for (const auto& v : viol)
            if (v.find("root path") != std::string::npos) mentions = true;
        CHECK(mentions);
    }
}

TEST_CASE("structure spec json round trip") {
    StructureSpec spec{.kind = StructureKind::NExtendedHangingLadder, .order = 2};
    spec.t_param = 3;
    spec.q_len = 6;
    spec.anchors = {1, 4, 7};
    spec.v_q_extra = {{2}, {}};
    spec.w_q = {{5}, {1, 6}};
    std::string js = structure_spec_to_json(spec);
    StructureSpec back = structure_spec_from_json(js);
    CHECK(back.kind == spec.kind);
    CHECK(back.order == spec.order);
    CHECK(back.anchors == spec.anchors);
    CHECK(back.w_q == spec.w_q);
    auto m = make(back);
    CHECK(validate(m.graph, back).empty());
}

TEST_CASE("patched cycles") {
    SUBCASE("w=1, anchors = identity, no extras") {
        std::vector<int> anchors{1, 2, 3, 4, 5};
        auto pc = make_patched_cycle(1, 5, 5, anchors, {});
        CHECK(validate_patched_cycle(pc, false).empty());
        CHECK(patched_cycle_is_simple(pc));
    }
    SUBCASE("w=2 with independent patches is simple") {
        auto pc = make_patched_cycle(2, 3, 8, {2, 5, 7}, {});
        CHECK(validate_patched_cycle(pc, true).empty());
    }
    SUBCASE("edge to a later anchor is rejected") {
        CHECK_THROWS_AS(make_patched_cycle(1, 5, 9, {1, 3, 5, 7, 9},
                                           {{"s1_3", "q9"}}),
                        input_error);
    }
    SUBCASE("edges to earlier anchors and non-anchors are allowed") {
        auto pc = make_patched_cycle(2, 3, 9, {2, 5, 8},
                                     {{"s1_3", "q2"}, {"s1_2", "q4"}, {"s1_1", "s2_1"}});
        CHECK(validate_patched_cycle(pc, false).empty());
        CHECK_FALSE(patched_cycle_is_simple(pc));
    }
}

TEST_CASE("bfs leveling") {
    SUBCASE("star") {
        GraphBuilder b;
        for (int i = 1; i <= 4; ++i) b.add_edge("c", "x" + std::to_string(i));
        Graph g = b.build();
        auto lv = bfs_leveling(g, "c");
        CHECK(lv.levels.size() == 2);
        CHECK(lv.levels[0] == std::vector<Label>{"c"});
        CHECK(lv.levels[1].size() == 4);
        CHECK(validate_leveling(g, lv).empty());
    }
    SUBCASE("path from an end") {
        Graph p5 = path_graph(5);
        auto lv = bfs_leveling(p5, "1");
        CHECK(lv.levels.size() == 5);
        for (const auto& l : lv.levels) CHECK(l.size() == 1);
        CHECK(validate_leveling(p5, lv).empty());
    }
    SUBCASE("petersen levels 1,3,6") {
        // standard petersen: outer C5, inner 5-star polygon, spokes
        GraphBuilder b;
        for (int i = 0; i < 5; ++i) {
            b.add_edge("o" + std::to_string(i), "o" + std::to_string((i + 1) % 5));
            b.add_edge("i" + std::to_string(i), "i" + std::to_string((i + 2) % 5));
            b.add_edge("o" + std::to_string(i), "i" + std::to_string(i));
        }
        Graph pet = b.build();
        auto lv = bfs_leveling(pet, "o0");
        REQUIRE(lv.levels.size() == 3);
        CHECK(lv.levels[0].size() == 1);
        CHECK(lv.levels[1].size() == 3);
        CHECK(lv.levels[2].size() == 6);
        CHECK(validate_leveling(pet, lv).empty());
    }
    SUBCASE("disconnected input is an error") {
        Graph g = Graph::from_vertices({"a", "b"});
        CHECK_THROWS_AS(bfs_leveling(g, "a"), input_error);
    }
    SUBCASE("leveling invariants on random connected graphs") {
        std::mt19937 rng(101);
        int done = 0;
        for (int trial = 0; trial < 400 && done < 200; ++trial) {
            GraphBuilder b;
            int n = 4 + (int)(rng() % 17);
            for (int i = 1; i <= n; ++i) b.add_vertex(std::to_string(i));
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (rng() % 5 == 0) b.add_edge(std::to_string(i), std::to_string(j));
            Graph g = b.build();
            if (!g.is_connected()) continue;
            auto lv = bfs_leveling(g, g.labels()[rng() % n]);
            CHECK(validate_leveling(g, lv).empty());
            ++done;
        }
        CHECK(done >= 100);
    }
}

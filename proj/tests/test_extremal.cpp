#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chigap/enumerate.hpp"
#include "chigap/extremal.hpp"
#include "chigap/graph.hpp"
#include "chigap/random.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <vector>

using namespace chigap;
using namespace testutil;

namespace {

// Leaf stripping in a caller-chosen random order instead of lowest-id-first;
// used to show the core is independent of removal order.
Graph strip_random_order(const Graph& g, SplitMix64& rng) {
    const int n = g.vertex_count();
    std::vector<char> alive(n, 1);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    int remaining = n;
    while (remaining > 1) {
        std::vector<int> leaves;
        for (int v = 0; v < n; ++v)
            if (alive[v] && deg[v] == 1) leaves.push_back(v);
        if (leaves.empty()) break;
        int leaf = leaves[rng.next_below(leaves.size())];
        alive[leaf] = 0;
        --remaining;
        g.for_each_neighbor(leaf, [&](VertexId u) {
            if (alive[u]) --deg[u];
        });
    }
    std::vector<VertexId> keep;
    for (int v = 0; v < n; ++v)
        if (alive[v]) keep.push_back(v);
    return g.induced_subgraph(keep);
}

}  // namespace

TEST_CASE("gap on the small named graphs") {
    GapReport k1 = gap(Graph::from_edges(1, {}));
    CHECK(k1.n_vertices == 1);
    CHECK(k1.n_edges == 0);
    CHECK(k1.chi == 1);
    CHECK(k1.gap == 0);

    GapReport k4 = gap(make_complete(4));
    CHECK(k4.n_edges == 6);
    CHECK(k4.chi == 4);
    CHECK(k4.gap == 0);

    GapReport c5 = gap(make_cycle(5));
    CHECK(c5.chi == 3);
    CHECK(c5.gap == 0);

    GapReport c4 = gap(make_cycle(4));
    CHECK(c4.chi == 2);
    CHECK(c4.gap == 1);

    GapReport pet = gap(petersen());
    CHECK(pet.n_vertices == 10);
    CHECK(pet.n_edges == 15);
    CHECK(pet.chi == 3);
    CHECK(pet.gap == 5);

    CHECK_THROWS_AS(gap(Graph::from_edges(4, {{0, 1}, {2, 3}})), std::invalid_argument);
}

TEST_CASE("trees always land on gap zero") {
    SplitMix64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(12));
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v)
            edges.emplace_back(static_cast<int>(rng.next_below(v)), v);
        GapReport r = gap(Graph::from_edges(n, edges));
        CHECK(r.chi == 2);
        CHECK(r.gap == 0);
    }
}

TEST_CASE("strip_to_core") {
    SUBCASE("trees collapse to a single vertex") {
        auto [core, vertices] = strip_to_core(make_star(5));
        CHECK(core.vertex_count() == 1);
        CHECK(vertices.size() == 1);
        auto path = strip_to_core(make_path(7));
        CHECK(path.core.vertex_count() == 1);
    }
    SUBCASE("cycles survive whole") {
        Graph g = make_cycle(5);
        for (int anchor : {0, 2, 4})
            for (int reps = 0; reps < anchor + 1; ++reps) g = g.add_pendant(anchor);
        auto [core, vertices] = strip_to_core(g);
        CHECK(core == make_cycle(5));
        CHECK(vertices == std::vector<VertexId>{0, 1, 2, 3, 4});
    }
    SUBCASE("paw strips to its triangle") {
        auto [core, vertices] = strip_to_core(make_cycle(3).add_pendant(1));
        CHECK(core == make_complete(3));
        CHECK(vertices == std::vector<VertexId>{0, 1, 2});
    }
    SUBCASE("disconnected input is rejected") {
        CHECK_THROWS_AS(strip_to_core(Graph::from_edges(2, {})), std::invalid_argument);
    }
}

TEST_CASE("classify recognizes the structural families") {
    Classification star = classify(make_star(5));
    CHECK(star.kind == ExtremalKind::type_a);
    CHECK(star.core_order == 1);

    Graph k4_tail = make_complete(4).add_pendant(2).add_pendant(4);  // pendant path
    Classification a4 = classify(k4_tail);
    CHECK(a4.kind == ExtremalKind::type_a);
    CHECK(a4.core_order == 4);
    CHECK(a4.core_vertices == std::vector<VertexId>{0, 1, 2, 3});

    Graph c7_tree = make_cycle(7).add_pendant(3).add_pendant(7).add_pendant(3);
    Classification b7 = classify(c7_tree);
    CHECK(b7.kind == ExtremalKind::type_b);
    CHECK(b7.core_order == 7);

    CHECK(classify(make_cycle(4)).kind == ExtremalKind::neither);
    CHECK(classify(petersen()).kind == ExtremalKind::neither);
    Graph bowtie = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(classify(bowtie).kind == ExtremalKind::neither);

    // triangle core reports type A, not type B
    Classification paw = classify(make_cycle(3).add_pendant(0));
    CHECK(paw.kind == ExtremalKind::type_a);
    CHECK(paw.core_order == 3);
}

TEST_CASE("build_decorated") {
    TreeAttachment three_path{0, {-1, 0, 1}};
    Graph p4 = build_decorated(CoreKind::complete, 1, std::vector{three_path});
    CHECK(p4.vertex_count() == 4);
    CHECK(p4.edge_count() == 3);
    CHECK(classify(p4).kind == ExtremalKind::type_a);
    CHECK(classify(p4).core_order == 1);

    Graph c5 = build_decorated(CoreKind::cycle, 5, {});
    CHECK(c5 == make_cycle(5));
    CHECK(classify(c5).kind == ExtremalKind::type_b);
    CHECK(classify(c5).core_order == 5);

    SUBCASE("even cycle cores give gap 1 and classify as neither") {
        SplitMix64 rng(77);
        for (int trial = 0; trial < 20; ++trial) {
            Graph g = random_decorated(CoreKind::cycle, 4, 14, rng);
            CHECK(classify(g).kind == ExtremalKind::neither);
            GapReport r = gap(g);
            CHECK(r.chi == 2);
            CHECK(r.gap == 1);
        }
    }

    SUBCASE("each attached tree adds exactly its vertex count in edges") {
        SplitMix64 rng(78);
        for (int trial = 0; trial < 30; ++trial) {
            const int m = 1 + static_cast<int>(rng.next_below(5));
            Graph bare = build_decorated(CoreKind::complete, m, {});
            Graph grown = random_decorated(CoreKind::complete, m, 18, rng);
            CHECK(grown.edge_count() - bare.edge_count() ==
                  grown.vertex_count() - bare.vertex_count());
        }
    }

    SUBCASE("malformed attachments are rejected") {
        CHECK_THROWS_AS(build_decorated(CoreKind::complete, 2,
                                        std::vector{TreeAttachment{5, {-1}}}),
                        std::invalid_argument);
        CHECK_THROWS_AS(build_decorated(CoreKind::complete, 2,
                                        std::vector{TreeAttachment{0, {-1, 2}}}),
                        std::invalid_argument);
        CHECK_THROWS_AS(build_decorated(CoreKind::cycle, 2, {}), std::invalid_argument);
    }
}

TEST_CASE("stripping order does not change the core up to isomorphism") {
    SplitMix64 rng(314);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(7));
        Graph g = random_connected_graph(n, rng);
        Graph reference = canonical_form(strip_to_core(g).core);
        for (int rep = 0; rep < 3; ++rep)
            CHECK(canonical_form(strip_random_order(g, rng)) == reference);
    }
}

TEST_CASE("converse identities for the two families") {
    SplitMix64 rng(555);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 3 + static_cast<int>(rng.next_below(4));
        Graph a = random_decorated(CoreKind::complete, m, 16, rng);
        Classification ca = classify(a);
        REQUIRE(ca.kind == ExtremalKind::type_a);
        REQUIRE(ca.core_order == m);
        CHECK(a.edge_count() - a.vertex_count() == m * (m - 1) / 2 - m);

        const int len = 5 + 2 * static_cast<int>(rng.next_below(4));
        Graph b = random_decorated(CoreKind::cycle, len, 16, rng);
        REQUIRE(classify(b).kind == ExtremalKind::type_b);
        CHECK(b.edge_count() == b.vertex_count());
    }
    // a K_2 core plus trees is itself a tree, so it reports the K_1 core
    SplitMix64 rng2(556);
    for (int trial = 0; trial < 10; ++trial) {
        Graph t = random_decorated(CoreKind::complete, 2, 12, rng2);
        Classification ct = classify(t);
        CHECK(ct.kind == ExtremalKind::type_a);
        CHECK(ct.core_order == 1);
        CHECK(t.edge_count() == t.vertex_count() - 1);
    }
}

TEST_CASE("decorated chromatic numbers match their cores") {
    SplitMix64 rng(2468);
    for (int trial = 0; trial < 10; ++trial) {
        CHECK(chromatic_number(random_decorated(CoreKind::complete, 4, 16, rng)).chi == 4);
        CHECK(chromatic_number(random_decorated(CoreKind::cycle, 9, 18, rng)).chi == 3);
        CHECK(chromatic_number(random_decorated(CoreKind::cycle, 8, 18, rng)).chi == 2);
    }
    CHECK(decorated_chi_check(40, 20260808));
}

TEST_CASE("pendant closure keeps kind and core order") {
    CHECK(pendant_closure_check(make_complete(4), 30, 1));
    CHECK(pendant_closure_check(make_cycle(7), 30, 2));
    CHECK(pendant_closure_check(make_path(5), 30, 3));
    SplitMix64 rng(808);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = (trial % 2 == 0)
                      ? random_decorated(CoreKind::complete,
                                         1 + static_cast<int>(rng.next_below(5)), 14, rng)
                      : random_decorated(CoreKind::cycle,
                                         3 + 2 * static_cast<int>(rng.next_below(4)), 14, rng);
        CHECK(pendant_closure_check(g, 5, rng.next()));
    }
    CHECK_THROWS_AS(pendant_closure_check(make_cycle(4), 1, 0), std::invalid_argument);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chigap/coloring.hpp"
#include "chigap/enumerate.hpp"
#include "chigap/graph.hpp"
#include "chigap/random.hpp"
#include "test_util.hpp"

#include <vector>

using namespace chigap;
using namespace testutil;

TEST_CASE("verify_coloring") {
    CHECK(verify_coloring(make_cycle(4), Coloring{{0, 1, 0, 1}, 2}));
    CHECK_FALSE(verify_coloring(make_cycle(3), Coloring{{0, 1, 0}, 2}));
    CHECK(verify_coloring(Graph::from_edges(1, {}), Coloring{{0}, 1}));
    CHECK_THROWS_AS(verify_coloring(make_cycle(3), Coloring{{0, 1}, 2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_coloring(make_cycle(3), Coloring{{0, 1, -1}, 2}),
                    std::invalid_argument);
}

TEST_CASE("is_k_colorable on cycles and cliques") {
    CHECK_FALSE(is_k_colorable(make_cycle(5), 2).has_value());
    auto c5 = is_k_colorable(make_cycle(5), 3);
    REQUIRE(c5.has_value());
    CHECK(verify_coloring(make_cycle(5), *c5));
    CHECK(c5->num_colors == 3);

    CHECK_FALSE(is_k_colorable(make_complete(4), 3).has_value());
    auto k4 = is_k_colorable(make_complete(4), 4);
    REQUIRE(k4.has_value());
    CHECK(verify_coloring(make_complete(4), *k4));

    CHECK_THROWS_AS(is_k_colorable(make_cycle(3), 0), std::invalid_argument);
}

TEST_CASE("chromatic number of named families") {
    for (int m = 1; m <= 8; ++m) CHECK(chromatic_number(make_complete(m)).chi == m);
    for (int n = 1; n <= 5; ++n) {
        CHECK(chromatic_number(make_cycle(2 * n + 2)).chi == 2);
        CHECK(chromatic_number(make_cycle(2 * n + 1)).chi == 3);
    }
    CHECK(chromatic_number(make_path(2)).chi == 2);
    CHECK(chromatic_number(make_star(5)).chi == 2);
    // random trees stay 2-chromatic
    SplitMix64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(14));
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v)
            edges.emplace_back(static_cast<int>(rng.next_below(v)), v);
        CHECK(chromatic_number(Graph::from_edges(n, edges)).chi == 2);
    }
}

TEST_CASE("petersen graph is 3-chromatic via the k-colorability route") {
    Graph p = petersen();
    CHECK_FALSE(is_k_colorable(p, 2).has_value());
    auto three = is_k_colorable(p, 3);
    REQUIRE(three.has_value());
    CHECK(verify_coloring(p, *three));
    CHECK(chromatic_number(p).chi == 3);
}

TEST_CASE("witnesses are sound, color classes contiguous, minimality holds") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_below(9));
        Graph g = random_graph(n, rng);
        auto [chi, witness] = chromatic_number(g);
        CHECK(verify_coloring(g, witness));
        CHECK(witness.num_colors == chi);
        std::vector<int> used(chi, 0);
        for (int c : witness.color) {
            REQUIRE(c < chi);
            used[c] = 1;
        }
        for (int c = 0; c < chi; ++c) CHECK(used[c] == 1);
        if (chi > 1) CHECK_FALSE(is_k_colorable(g, chi - 1).has_value());
    }
}

TEST_CASE("oracle equivalence on every graph with up to 4 vertices") {
    for (int n = 1; n <= 4; ++n) {
        const std::uint64_t total = std::uint64_t{1} << edge_slot_count(n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            Graph g = graph_from_edge_mask(n, mask);
            CHECK(chromatic_number(g).chi == odometer_chromatic(g));
        }
    }
}

TEST_CASE("the two oracles agree with each other") {
    SplitMix64 rng(31337);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_below(5));
        Graph g = random_graph(n, rng);
        CHECK(odometer_chromatic(g) == backtracking_chromatic(g));
    }
}

TEST_CASE("deletion monotonicity and greedy extension") {
    SplitMix64 rng(404);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(6));
        Graph g = random_graph(n, rng);
        const int chi = chromatic_number(g).chi;
        for (int v = 0; v < n; ++v) {
            Graph rest = g.remove_vertex(v);
            const int chi_rest = chromatic_number(rest).chi;
            CHECK((chi == chi_rest || chi == chi_rest + 1));
            if (g.degree(v) < chi_rest) CHECK(chi == chi_rest);
        }
    }
}

TEST_CASE("chromatic_number rejects the empty graph") {
    CHECK_THROWS_AS(chromatic_number(Graph{}), std::invalid_argument);
}

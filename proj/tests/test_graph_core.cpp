#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "unienergy/families.hpp"
#include "unienergy/graph.hpp"

using namespace unienergy;

TEST_CASE("graph construction enforces invariants") {
    LabeledGraph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(0, 1), Error);
    CHECK_THROWS_AS(g.add_edge(1, 0), Error);
    CHECK_THROWS_AS(g.add_edge(2, 2), Error);
    CHECK_THROWS_AS(g.add_edge(0, 3), Error);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("girth and cycle extraction") {
    SUBCASE("C_4 is its own cycle") {
        auto c4 = build(Family::Cycle, 4);
        auto w = girth_and_cycle(c4);
        REQUIRE(w.has_value());
        CHECK(w->girth == 4);
        CHECK(w->cycle_vertices.size() == 4);
    }
    SUBCASE("paths are trees") {
        auto p5 = build(Family::Path, 5);
        CHECK_FALSE(girth_and_cycle(p5).has_value());
    }
    SUBCASE("A_8 has girth 4") {
        auto a8 = build(Family::A, 8);
        auto w = girth_and_cycle(a8);
        REQUIRE(w.has_value());
        CHECK(w->girth == 4);
    }
    SUBCASE("disconnected input is rejected") {
        LabeledGraph g(4);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        CHECK_THROWS_AS((void)girth_and_cycle(g), Error);
    }
    SUBCASE("two independent cycles are rejected") {
        LabeledGraph g(6);
        for (auto [u, v] : std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}})
            g.add_edge(u, v);
        CHECK_THROWS_AS((void)girth_and_cycle(g), Error);
    }
    SUBCASE("returned cycle is a simple cycle for random unicyclic graphs") {
        auto r = testutil::rng(1001);
        for (int trial = 0; trial < 50; ++trial) {
            auto g = testutil::random_unicyclic(5 + trial % 8, r);
            auto w = girth_and_cycle(g);
            REQUIRE(w.has_value());
            REQUIRE(w->girth >= 3);
            int k = w->girth;
            for (int i = 0; i < k; ++i)
                CHECK(g.has_edge(w->cycle_vertices[i], w->cycle_vertices[(i + 1) % k]));
            std::vector<int> sorted = w->cycle_vertices;
            std::sort(sorted.begin(), sorted.end());
            CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
        }
    }
}

TEST_CASE("perfect matchings") {
    SUBCASE("K_2") {
        auto k2 = build(Family::Path, 2);
        auto m = has_perfect_matching(k2);
        REQUIRE(m.has_value());
        CHECK(m->edges == std::vector<Edge>{{0, 1}});
    }
    SUBCASE("C_5 has none") {
        CHECK_FALSE(has_perfect_matching(build(Family::Cycle, 5)).has_value());
    }
    SUBCASE("radialene on 8 vertices matches along the pendant edges") {
        auto s = build(Family::SRadialene, 8);
        auto m = has_perfect_matching(s);
        REQUIRE(m.has_value());
        CHECK(m->edges == std::vector<Edge>{{0, 4}, {1, 5}, {2, 6}, {3, 7}});
        CHECK(all_perfect_matchings(s).size() == 1);
    }
    SUBCASE("odd order always absent") {
        auto r = testutil::rng(7);
        for (int n : {3, 5, 7, 9, 11})
            CHECK_FALSE(has_perfect_matching(testutil::random_tree(n, r)).has_value());
    }
    SUBCASE("witness is deterministic") {
        auto g = build(Family::A, 10);
        auto m1 = has_perfect_matching(g);
        auto m2 = has_perfect_matching(g);
        CHECK(m1->edges == m2->edges);
    }
}

TEST_CASE("max degree") {
    CHECK(max_degree(build(Family::Cycle, 6)) == 2);
    CHECK(max_degree(build(Family::SRadialene, 8)) == 3);
    CHECK(max_degree(LabeledGraph(1)) == 0);
    CHECK(max_degree(LabeledGraph(0)) == 0);
}

TEST_CASE("cycle distance profile") {
    SUBCASE("C_8: everything on the cycle") {
        auto g = build(Family::Cycle, 8);
        auto w = girth_and_cycle(g);
        auto [d, t] = cycle_distance_profile(g, *w);
        CHECK(d == 0);
        CHECK(t == 8);
    }
    SUBCASE("radialene on 8: pendants at distance 1") {
        auto g = build(Family::SRadialene, 8);
        auto w = girth_and_cycle(g);
        auto [d, t] = cycle_distance_profile(g, *w);
        CHECK(d == 1);
        CHECK(t == 4);
    }
    SUBCASE("A_8 profile agrees with a direct BFS oracle") {
        auto g = build(Family::A, 8);
        auto w = girth_and_cycle(g);
        // Oracle: multi-source BFS from the cycle set, computed right here.
        std::vector<int> dist(g.n, -1);
        std::vector<int> frontier = w->cycle_vertices;
        for (int v : frontier) dist[v] = 0;
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int v : frontier)
                for (int x : g.adj[v])
                    if (dist[x] < 0) {
                        dist[x] = dist[v] + 1;
                        next.push_back(x);
                    }
            frontier = std::move(next);
        }
        int dd = *std::max_element(dist.begin(), dist.end());
        int tt = static_cast<int>(std::count(dist.begin(), dist.end(), dd));
        auto [d, t] = cycle_distance_profile(g, *w);
        CHECK(d == dd);
        CHECK(t == tt);
        // Frozen from the oracle: the far tooth of the comb tail sits at
        // distance 3, uniquely.
        CHECK(d == 3);
        CHECK(t == 1);
    }
    SUBCASE("d = 0 iff every vertex lies on the cycle") {
        auto r = testutil::rng(99);
        for (int trial = 0; trial < 40; ++trial) {
            auto g = testutil::random_unicyclic(6 + trial % 6, r);
            auto w = girth_and_cycle(g);
            auto [d, t] = cycle_distance_profile(g, *w);
            CHECK((d == 0) == (w->girth == g.n));
        }
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "unienergy/canonical.hpp"
#include "unienergy/energy.hpp"
#include "unienergy/enumerate.hpp"
#include "unienergy/families.hpp"

using namespace unienergy;

TEST_CASE("small orders contain the expected members") {
    auto run6 = enumerate_Un(6);
    std::set<std::string> keys6;
    for (auto& r : run6.records) keys6.insert(r.key);
    CHECK(keys6.count(fragment_key(build(Family::SRadialene, 6))) == 1);
    CHECK(keys6.count(fragment_key(build(Family::A, 6))) == 1);

    auto run8 = enumerate_Un(8);
    std::set<std::string> keys8;
    for (auto& r : run8.records) keys8.insert(r.key);
    for (Family f : {Family::A, Family::B, Family::D, Family::E})
        CHECK(keys8.count(fragment_key(build(f, 8))) == 1);
}

TEST_CASE("records satisfy the class invariants") {
    for (int n : {6, 8, 10}) {
        auto run = enumerate_Un(n);
        std::set<std::string> keys;
        for (const auto& r : run.records) {
            CHECK(r.graph.n == n);
            CHECK(r.graph.edge_count() == n);
            CHECK(max_degree(r.graph) <= 3);
            CHECK(is_connected(r.graph));
            CHECK(has_perfect_matching(r.graph).has_value());
            CHECK(keys.insert(r.key).second);  // pairwise distinct
            CHECK(r.key == fragment_key(r.graph));
        }
    }
}

TEST_CASE("generator counts match the published sequences") {
    // Non-isomorphic trees on n vertices, n = 1..12.
    const std::vector<std::size_t> tree_counts = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    for (int n = 1; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(all_trees(n).size() == tree_counts[n - 1]);
    }
    // Connected unicyclic graphs on n vertices, n = 3..10.
    const std::vector<std::size_t> unicyclic_counts = {1, 2, 5, 13, 33, 89, 240, 657};
    for (int n = 3; n <= 10; ++n) {
        CAPTURE(n);
        CHECK(unicyclic_all_by_tree_plus_edge(n).size() == unicyclic_counts[n - 3]);
    }
}

TEST_CASE("the hub shape is the global minimizer without the degree cap") {
    // Anchors the U1 construction: unique minimum-energy conjugated
    // unicyclic graph over the unrestricted class.
    for (int n : {8, 10, 12}) {
        std::string best_key;
        double best = std::numeric_limits<double>::infinity();
        for (const auto& g : unicyclic_all_by_tree_plus_edge(n)) {
            if (!has_perfect_matching(g)) continue;
            double e = energy_eigen(g).value;
            if (e < best) {
                best = e;
                best_key = fragment_key(g);
            }
        }
        CAPTURE(n);
        CHECK(best_key == fragment_key(build(Family::U1, n)));
    }
}

TEST_CASE("completeness against the tree-plus-edge oracle") {
    for (int n : {6, 8, 10}) {
        std::set<std::string> from_oracle;
        for (const auto& g : unicyclic_all_by_tree_plus_edge(n)) {
            if (max_degree(g) > 3) continue;
            if (!has_perfect_matching(g)) continue;
            from_oracle.insert(fragment_key(g));
        }
        std::set<std::string> from_run;
        for (const auto& r : enumerate_Un(n).records) from_run.insert(r.key);
        CHECK(from_oracle == from_run);
    }
}

TEST_CASE("determinism") {
    auto a = enumerate_Un(10);
    auto b = enumerate_Un(10);
    REQUIRE(a.count() == b.count());
    for (int i = 0; i < a.count(); ++i) {
        CHECK(a.records[i].key == b.records[i].key);
        CHECK(a.records[i].energy == b.records[i].energy);
    }
    EnumerateOptions two_jobs;
    two_jobs.jobs = 2;
    auto c = enumerate_Un(10, two_jobs);
    REQUIRE(c.count() == a.count());
    for (int i = 0; i < a.count(); ++i) CHECK(a.records[i].key == c.records[i].key);
}

TEST_CASE("girth-4 members split into the three matching classes") {
    auto run = enumerate_Un(10);
    for (const auto& r : run.records) {
        if (r.girth != 4) continue;
        auto w = girth_and_cycle(r.graph);
        std::vector<Edge> cyc;
        for (int i = 0; i < 4; ++i)
            cyc.push_back(make_edge(w->cycle_vertices[i], w->cycle_vertices[(i + 1) % 4]));
        for (const auto& m : all_perfect_matchings(r.graph)) {
            int k = 0;
            for (auto e : m.edges)
                if (std::find(cyc.begin(), cyc.end(), e) != cyc.end()) ++k;
            CHECK(k >= 0);
            CHECK(k <= 2);
        }
    }
}

TEST_CASE("conjugated tree enumeration") {
    SUBCASE("order 4: only the path") {
        auto trees = enumerate_trees_conjugated(4);
        REQUIRE(trees.size() == 1);
        CHECK(fragment_key(trees[0]) == fragment_key(build(Family::Path, 4)));
    }
    SUBCASE("the comb minimizes energy at orders 6 through 14") {
        for (int n : {6, 8, 10, 12, 14}) {
            auto trees = enumerate_trees_conjugated(n);
            std::string comb_key = fragment_key(build(Family::F, n));
            double comb_energy = energy_eigen(build(Family::F, n)).value;
            bool found = false;
            for (const auto& t : trees) {
                if (fragment_key(t) == comb_key) {
                    found = true;
                    continue;
                }
                CHECK(energy_eigen(t).value > comb_energy + 1e-9);
            }
            CHECK(found);
        }
    }
}

TEST_CASE("main verification holds at small orders") {
    for (int n : {8, 10, 12}) {
        auto rep = verify_main_theorem(n);
        CAPTURE(n);
        CHECK(rep.holds);
        CHECK(rep.counterexamples.empty());
    }
}

TEST_CASE("girth verification holds at small orders") {
    for (int n : {8, 10}) {
        for (const auto& rep : verify_girth_theorems(n)) {
            CAPTURE(n);
            CAPTURE(rep.id);
            CHECK(rep.holds);
            CHECK(rep.counterexamples.empty());
        }
    }
}

TEST_CASE("size limits") {
    CHECK_THROWS_AS((void)enumerate_Un(7), Error);
    CHECK_THROWS_AS((void)enumerate_Un(18), Error);
    CHECK_THROWS_AS((void)enumerate_trees_conjugated(20), Error);
}

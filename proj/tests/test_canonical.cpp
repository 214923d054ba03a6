#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "test_util.hpp"
#include "unienergy/canonical.hpp"
#include "unienergy/families.hpp"

using namespace unienergy;

TEST_CASE("isomorphic relabelings collapse to one key") {
    auto p4 = build(Family::Path, 4);
    auto relabeled = permute(p4, {2, 0, 3, 1});
    CHECK(canonical_form(p4) == canonical_form(relabeled));
    CHECK(fragment_key(p4) == fragment_key(relabeled));
}

TEST_CASE("non-isomorphic graphs get distinct keys") {
    auto p4 = build(Family::Path, 4);
    auto s4 = build(Family::Star, 4);
    CHECK(canonical_form(p4) != canonical_form(s4));
    CHECK(fragment_key(p4) != fragment_key(s4));
}

TEST_CASE("exactly two trees on 4 vertices") {
    // Brute force over all labeled trees on 4 vertices (every graph with 3
    // edges that is connected), collected by canonical key.
    std::set<CanonicalForm> keys;
    std::vector<Edge> all;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) all.push_back({u, v});
    int m = static_cast<int>(all.size());
    for (int mask = 0; mask < (1 << m); ++mask) {
        if (std::popcount(static_cast<unsigned>(mask)) != 3) continue;
        LabeledGraph g(4);
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) g.add_edge(all[i].first, all[i].second);
        if (!is_connected(g)) continue;
        keys.insert(canonical_form(g));
    }
    CHECK(keys.size() == 2);
}

TEST_CASE("random permutation invariance on the family corpus") {
    auto r = testutil::rng(42);
    std::vector<LabeledGraph> corpus;
    for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::A, 8},
                                                           {Family::B, 10},
                                                           {Family::D, 10},
                                                           {Family::E, 10},
                                                           {Family::F, 10},
                                                           {Family::SRadialene, 10},
                                                           {Family::Cycle, 9},
                                                           {Family::Star, 7}})
        corpus.push_back(build(f, n));
    for (const auto& g : corpus) {
        auto base = canonical_form(g);
        auto base_frag = fragment_key(g);
        for (int i = 0; i < 100; ++i) {
            auto perm = testutil::random_permutation(g.n, r);
            auto h = permute(g, perm);
            CHECK(canonical_form(h) == base);
            CHECK(fragment_key(h) == base_frag);
        }
    }
}

TEST_CASE("two key routes agree on whether graphs are isomorphic") {
    // fragment_key and the backtracking code are independent routes; they
    // must induce the same partition on a mixed corpus.
    auto r = testutil::rng(4242);
    std::vector<LabeledGraph> corpus;
    for (int i = 0; i < 60; ++i) corpus.push_back(testutil::random_tree(8, r));
    for (int i = 0; i < 60; ++i) corpus.push_back(testutil::random_unicyclic(8, r));
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = i + 1; j < corpus.size(); ++j) {
            bool frag_eq = fragment_key(corpus[i]) == fragment_key(corpus[j]);
            bool canon_eq = canonical_form(corpus[i]) == canonical_form(corpus[j]);
            CHECK(frag_eq == canon_eq);
        }
}

TEST_CASE("size limit") {
    CHECK_THROWS_AS((void)canonical_form(LabeledGraph(25)), Error);
    CHECK_NOTHROW((void)fragment_key(build(Family::F, 40)));
}

TEST_CASE("fragment key rejects multicyclic components") {
    LabeledGraph g(5);
    for (auto [u, v] : std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}})
        g.add_edge(u, v);
    CHECK_THROWS_AS((void)fragment_key(g), Error);
}

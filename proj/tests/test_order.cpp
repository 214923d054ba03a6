#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "unienergy/energy.hpp"
#include "unienergy/families.hpp"
#include "unienergy/order.hpp"

using namespace unienergy;

namespace {

CoefficientSequence seq(std::initializer_list<long long> v) {
    CoefficientSequence s;
    for (long long c : v) s.b.emplace_back(c);
    return s;
}

}  // namespace

TEST_CASE("verdicts on fixed pairs") {
    SUBCASE("B_8 strictly dominates A_8 with witness at index 6") {
        auto v = compare(b_sequence(build(Family::B, 8)), b_sequence(build(Family::A, 8)));
        CHECK(v.relation == Relation::DominatesStrictly);
        REQUIRE(v.witness_index.has_value());
        CHECK(*v.witness_index == 6);
    }
    SUBCASE("a graph equals itself") {
        auto b = b_sequence(build(Family::D, 10));
        CHECK(compare(b, b).relation == Relation::Equal);
    }
    SUBCASE("D_8 strictly dominates E_8") {
        auto v = compare(b_sequence(build(Family::D, 8)), b_sequence(build(Family::E, 8)));
        CHECK(v.relation == Relation::DominatesStrictly);
    }
    SUBCASE("incomparable carries both witnesses") {
        auto v = compare(seq({1, 0, 5, 0, 3}), seq({1, 0, 4, 0, 4}));
        CHECK(v.relation == Relation::Incomparable);
        CHECK(*v.witness_index == 2);
        CHECK(*v.conflict_index == 4);
    }
    SUBCASE("length mismatch") {
        CHECK_THROWS_AS((void)compare(seq({1, 0, 1}), seq({1, 0, 1, 0})), Error);
    }
    SUBCASE("forced indices asserted") {
        CHECK_THROWS_AS((void)compare(seq({2, 0, 1}), seq({1, 0, 1})), Error);
    }
}

TEST_CASE("verdict lattice on random triples") {
    std::mt19937_64 r(99);
    std::uniform_int_distribution<int> d(0, 6);
    auto random_seq = [&](int k) {
        CoefficientSequence s;
        s.b = {BigInt(1), BigInt(0)};
        for (int i = 2; i <= k; ++i) s.b.emplace_back(d(r));
        return s;
    };
    for (int trial = 0; trial < 400; ++trial) {
        auto a = random_seq(6), b = random_seq(6), c = random_seq(6);
        auto vab = compare(a, b);
        auto vba = compare(b, a);
        // antisymmetry
        if (vab.relation == Relation::DominatesStrictly)
            CHECK(vba.relation == Relation::DominatedStrictly);
        if (vab.relation == Relation::Equal) CHECK(vba.relation == Relation::Equal);
        if (vab.relation == Relation::Incomparable) CHECK(vba.relation == Relation::Incomparable);
        // transitivity of (weak) dominance
        auto dominates = [](Relation rel) {
            return rel == Relation::DominatesStrictly || rel == Relation::Equal;
        };
        if (dominates(vab.relation) && dominates(compare(b, c).relation))
            CHECK(dominates(compare(a, c).relation));
    }
}

TEST_CASE("strict dominance implies strict energy inequality") {
    SUBCASE("fixed family pairs") {
        auto eb8 = energy_eigen(build(Family::B, 8));
        auto ea8 = energy_eigen(build(Family::A, 8));
        auto v = compare(b_sequence(build(Family::B, 8)), b_sequence(build(Family::A, 8)));
        CHECK(order_implies_energy(v, eb8, ea8));
        CHECK(eb8.value > ea8.value);

        auto same = energy_eigen(build(Family::D, 10));
        OrderVerdict eq{Relation::Equal, std::nullopt, std::nullopt};
        CHECK(order_implies_energy(eq, same, same));
    }
    SUBCASE("C_12 dominates B_12 and is higher in energy") {
        auto c = build(Family::Cycle, 12);
        auto b = build(Family::B, 12);
        auto v = compare(b_sequence(c), b_sequence(b));
        CHECK(v.relation == Relation::DominatesStrictly);
        CHECK(order_implies_energy(v, energy_eigen(c), energy_eigen(b)));
    }
    SUBCASE("exhaustive over comparable family pairs of equal order") {
        for (int n : {8, 10, 12}) {
            std::vector<Family> fams{Family::A, Family::B, Family::D, Family::E,
                                     Family::SRadialene, Family::Cycle};
            for (auto f1 : fams)
                for (auto f2 : fams) {
                    if (f1 == f2) continue;
                    auto g1 = build(f1, n);
                    auto g2 = build(f2, n);
                    auto v = compare(b_sequence(g1), b_sequence(g2));
                    CHECK(order_implies_energy(v, energy_eigen(g1), energy_eigen(g2)));
                }
        }
    }
}

TEST_CASE("dominance families at scale") {
    for (int n = 10; n <= 40; n += 2) {
        CAPTURE(n);
        CHECK(compare(b_sequence(build(Family::E, n)), b_sequence(build(Family::D, n))).relation ==
              Relation::DominatesStrictly);
        CHECK(compare(b_sequence(build(Family::SRadialene, n)),
                      b_sequence(build(Family::B, n))).relation == Relation::DominatesStrictly);
    }
}

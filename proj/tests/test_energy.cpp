#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <Eigen/Dense>

#include "test_util.hpp"
#include "unienergy/energy.hpp"
#include "unienergy/families.hpp"

using namespace unienergy;

TEST_CASE("eigen-sum energies on pinned values") {
    CHECK(energy_eigen(build(Family::Path, 2)).value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(energy_eigen(build(Family::B, 8)).value == doctest::Approx(9.15298).epsilon(2e-5));
    CHECK(energy_eigen(build(Family::SRadialene, 8)).value ==
          doctest::Approx(9.65685).epsilon(2e-5));
}

TEST_CASE("Coulson integral energies on pinned values") {
    CHECK(energy_coulson(build(Family::Path, 2)).value == doctest::Approx(2.0).epsilon(1e-7));
    CHECK(energy_coulson(build(Family::A, 6)).value == doctest::Approx(6.60272).epsilon(2e-5));
    CHECK(energy_coulson(build(Family::D, 6)).value == doctest::Approx(7.20775).epsilon(2e-5));
}

TEST_CASE("two energy routes agree within the reported error") {
    for (auto [f, lo] : std::vector<std::pair<Family, int>>{
             {Family::A, 6}, {Family::B, 8}, {Family::D, 6}, {Family::E, 8},
             {Family::F, 4}, {Family::SRadialene, 6}}) {
        for (int n = lo; n <= 40; n += 2) {
            auto g = build(f, n);
            auto e1 = energy_eigen(g);
            auto e2 = energy_coulson(g);
            CAPTURE(family_name(f));
            CAPTURE(n);
            CHECK(std::abs(e1.value - e2.value) <= 1e-6);
            CHECK(std::abs(e1.value - e2.value) <= e1.err_estimate + e2.err_estimate);
        }
    }
    // odd-girth members go through the same integral with the odd part live
    for (int n : {7, 9, 11}) {
        auto g = build(Family::Cycle, n);
        CHECK(std::abs(energy_eigen(g).value - energy_coulson(g).value) <= 1e-6);
    }
}

TEST_CASE("spectral sanity") {
    auto r = testutil::rng(7321);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = testutil::random_unicyclic(8 + trial % 6, r);
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n, g.n);
        for (auto [u, v] : g.edges) a(u, v) = a(v, u) = 1.0;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
        double sum = 0, sum2 = 0;
        for (int i = 0; i < g.n; ++i) {
            sum += es.eigenvalues()[i];
            sum2 += es.eigenvalues()[i] * es.eigenvalues()[i];
        }
        CHECK(std::abs(sum) < 1e-9 * g.n);
        CHECK(sum2 == doctest::Approx(2.0 * g.edge_count()).epsilon(1e-9));
    }
}

TEST_CASE("energy difference by the log-ratio integral") {
    SUBCASE("identical graphs give exactly zero") {
        auto g = build(Family::A, 12);
        CHECK(energy_difference_coulson(g, g) == 0.0);
    }
    SUBCASE("pinned A6 - D6 difference, nullities 2 vs 0") {
        double d = energy_difference_coulson(build(Family::A, 6), build(Family::D, 6));
        CHECK(d == doctest::Approx(-0.60503).epsilon(2e-3));
    }
    SUBCASE("matches the eigen route on family pairs") {
        auto r = testutil::rng(1234);
        std::vector<std::pair<Family, int>> pool{{Family::A, 6},          {Family::B, 8},
                                                 {Family::D, 6},          {Family::E, 8},
                                                 {Family::SRadialene, 6}, {Family::U1, 6},
                                                 {Family::U2, 8}};
        int done = 0;
        for (int trial = 0; done < 50; ++trial) {
            std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
            auto [f1, lo1] = pool[pick(r)];
            auto [f2, lo2] = pool[pick(r)];
            std::uniform_int_distribution<int> ord(0, 8);
            int n = std::max(lo1, lo2) + 2 * ord(r);
            auto g1 = build(f1, n);
            auto g2 = build(f2, n);
            double diff = energy_difference_coulson(g1, g2);
            double want = energy_eigen(g1).value - energy_eigen(g2).value;
            CAPTURE(family_name(f1));
            CAPTURE(family_name(f2));
            CAPTURE(n);
            CHECK(diff == doctest::Approx(want).epsilon(0).scale(1).epsilon(1e-5));
            CHECK(std::abs(diff - want) <= 1e-5);
            ++done;
        }
    }
    SUBCASE("dominance sign: B_8 above A_8") {
        CHECK(energy_difference_coulson(build(Family::B, 8), build(Family::A, 8)) > 0.0);
    }
    SUBCASE("order mismatch rejected") {
        CHECK_THROWS_AS((void)energy_difference_coulson(build(Family::A, 8), build(Family::D, 10)),
                        Error);
    }
}

TEST_CASE("closed-form identities hold across the sampling range") {
    // 1000 log-spaced magnitudes in (1e-3, 1e3), plus their negatives.
    for (int i = 0; i < 1000; ++i) {
        double ex = -3.0 + 6.0 * i / 999.0;
        for (double sgn : {1.0, -1.0}) {
            double x = sgn * std::pow(10.0, ex);
            double zz1 = closedform::z1(x);
            double zz2 = closedform::z2(x);
            double x2 = x * x;
            CHECK(std::abs(zz1 + zz2 + x2 + 1.0) <= 1e-12 * (std::abs(zz1) + std::abs(zz2) + x2 + 1.0));
            CHECK(std::abs(zz1 * zz2 + x2) <= 1e-12 * x2);
            if (x > 0) {
                CHECK(zz1 / x > 0.0);
                CHECK(zz1 / x < 1.0);
            } else {
                CHECK(zz1 / x > -1.0);
                CHECK(zz1 / x < 0.0);
            }
        }
    }
    // the real-axis roots satisfy y1 + y2 = x^2 - 1 and y1 y2 = x^2
    for (double x : {3.0, 5.0, 0.1, -4.0}) {
        double s = closedform::y1(x) + closedform::y2(x);
        double p = closedform::y1(x) * closedform::y2(x);
        CHECK(s == doctest::Approx(x * x - 1.0).epsilon(1e-12));
        CHECK(p == doctest::Approx(x * x).epsilon(1e-10));
    }
    CHECK_THROWS_AS((void)closedform::y1(1.0), Error);
}

TEST_CASE("closed-form evaluation against the exact polynomials") {
    SUBCASE("order 6 at x = 1 has magnitude 13") {
        double v = closedform_eval(Family::A, 6, 1.0);
        CHECK(std::abs(v) == doctest::Approx(13.0).epsilon(1e-9));
        CHECK(closedform::f6(1.0) == doctest::Approx(13.0));
    }
    SUBCASE("D-chain order 8 at x = 2 has magnitude 1041") {
        double v = closedform_eval(Family::D, 8, 2.0);
        CHECK(std::abs(v) == doctest::Approx(1041.0).epsilon(1e-9));
        CHECK(closedform::g8(2.0) == doctest::Approx(1041.0));
    }
    SUBCASE("matches Horner evaluation at ix across orders and samples") {
        for (Family f : {Family::A, Family::D}) {
            for (int n = 6; n <= 40; n += 2) {
                CharPoly p = charpoly_recursive(build(f, n));
                for (double x : {0.7, 0.02, 1.0, 3.5, 40.0, 900.0, -0.7, -13.0}) {
                    std::complex<double> ix(0.0, x);
                    std::complex<double> want = p.eval(ix);
                    double got = closedform_eval(f, n, x);
                    CAPTURE(family_name(f));
                    CAPTURE(n);
                    CAPTURE(x);
                    CHECK(std::abs(got - want.real()) <= 1e-9 * std::abs(want));
                    CHECK(std::abs(want.imag()) <= 1e-9 * std::abs(want));
                }
            }
        }
    }
    SUBCASE("x = 0 rejected") {
        CHECK_THROWS_AS((void)closedform_eval(Family::A, 8, 0.0), Error);
    }
}

TEST_CASE("tail-ratio probe") {
    TailProbeReport rep = ad_tail_probe({1.0, -2.0, 0.5, 3.0, -0.25});
    CHECK(rep.integral == doctest::Approx(-0.8538292323).epsilon(1e-6));
    CHECK(rep.signs_ok);
    for (const auto& s : rep.samples) {
        CHECK(s.diff_negative);
        CHECK(s.sum_positive);
    }
    // the closed forms printed for the two sign quantities
    for (double x : {1.0, -2.0, 0.5}) {
        double zz = x * x;
        double root = std::sqrt(zz * zz + 6 * zz + 1);
        double denom = std::pow(x, 6) * (zz * zz + 6 * zz + 1);
        double want_diff = (-3 * std::pow(x, 8) - 15 * std::pow(x, 6) - 8 * std::pow(x, 4)) * root / denom;
        double want_sum =
            (4 * std::pow(x, 4) + 17 * std::pow(x, 6) + 20 * std::pow(x, 8) + 3 * std::pow(x, 10)) / denom;
        double got_diff = closedform::a1_ix(x) * closedform::b2_ix(x) -
                          closedform::a2_ix(x) * closedform::b1_ix(x);
        double got_sum = closedform::a1_ix(x) * closedform::b2_ix(x) +
                         closedform::a2_ix(x) * closedform::b1_ix(x);
        CHECK(got_diff == doctest::Approx(want_diff).epsilon(1e-9));
        CHECK(got_sum == doctest::Approx(want_sum).epsilon(1e-9));
    }
}

TEST_CASE("A-chain energy sits below the D-chain energy") {
    for (int n = 6; n <= 40; n += 2) {
        double ea = energy_eigen(build(Family::A, n)).value;
        double ed = energy_eigen(build(Family::D, n)).value;
        CAPTURE(n);
        CHECK(ea < ed - 1e-6);
    }
}

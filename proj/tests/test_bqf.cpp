#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "humbert/bqf.hpp"
#include "oracles.hpp"

using namespace humbert;

TEST_CASE("discriminant and content")
{
    CHECK(BQF{1, 0, 40}.disc() == -160);
    CHECK(BQF{5, 0, 8}.disc() == -160);
    CHECK(BQF{1, 1, 1}.disc() == -3);
    CHECK(BQF{8, 4, 8}.content() == 4);
    CHECK(BQF{5, 0, 8}(1, 1) == 13);
    CHECK(to_string(BQF{5, -2, 21}) == "(5,-2,21)");
}

TEST_CASE("reduction examples")
{
    CHECK(reduce({1, 2, 2}) == BQF{1, 0, 1});
    CHECK(reduce({1, 0, 1}) == BQF{1, 0, 1});
    CHECK(reduce({2, 2, 3}) == BQF{2, 2, 3});
    CHECK(reduce({2, -2, 3}) == BQF{2, 2, 3});
    CHECK(reduce({3, 0, 2}) == BQF{2, 0, 3});
    CHECK_THROWS_WITH(reduce({1, 0, -1}), "not positive definite");
    CHECK_THROWS_AS(reduce({-1, 0, -1}), MathError);
}

TEST_CASE("reduction is SL2-invariant and idempotent")
{
    // apply random-ish unimodular substitutions and check the reduced form is unchanged
    std::vector<std::array<std::int64_t, 4>> const mats = {
        {1, 1, 0, 1}, {0, -1, 1, 0}, {2, 1, 1, 1}, {3, 2, 1, 1}, {1, -3, 0, 1}, {5, 2, 2, 1}};
    for (std::int64_t d = -3; d >= -600; --d) {
        if (!is_discriminant(d))
            continue;
        for (BQF const& q : reduced_forms(d, false)) {
            REQUIRE(q.is_reduced());
            REQUIRE(reduce(q) == q);
            for (auto [p, r, s, t] : mats) {
                // Q(px + ry, sx + ty)
                BQF const g{q(p, s), 2 * q.a * p * r + q.b * (p * t + r * s) + 2 * q.c * s * t, q(r, t)};
                REQUIRE(g.disc() == d);
                REQUIRE(reduce(g) == q);
            }
        }
    }
}

TEST_CASE("reduced form lists")
{
    CHECK(reduced_forms(-3, true) == std::vector<BQF>{{1, 1, 1}});
    CHECK(reduced_forms(-4, true) == std::vector<BQF>{{1, 0, 1}});
    CHECK(reduced_forms(-160, true).size() == 4);
    CHECK_THROWS_WITH(reduced_forms(-5, true), "not a discriminant");
    CHECK(class_number(-3) == 1);
    CHECK(class_number(-4) == 1);
    CHECK(class_number(-8) == 1);
    CHECK(class_number(-160) == 4);
    CHECK(class_number(-23) == 3);
}

TEST_CASE("class numbers match the analytic class number formula")
{
    ClassNumberCache::instance().clear();
    std::map<std::int64_t, std::int64_t> fundamental;
    for (std::int64_t d = -3; d >= -10000; --d) {
        if (!is_discriminant(d))
            continue;
        auto const [d0, f] = fundamental_decomposition(d);
        auto it = fundamental.find(d0);
        if (it == fundamental.end())
            it = fundamental.emplace(d0, oracle::dirichlet_class_number_fundamental(d0, &kronecker)).first;
        std::int64_t const expected = oracle::class_number_from_conductor(d0, f, it->second, &kronecker);
        REQUIRE_MESSAGE(class_number(d) == expected, "d=" << d);
    }
}

TEST_CASE("class number cache does not change results")
{
    auto& cache = ClassNumberCache::instance();
    cache.clear();
    std::int64_t const cold = class_number(-3299);
    CHECK(cache.lookup(-3299) == cold);
    CHECK(class_number(-3299) == cold);
    cache.set_enabled(false);
    CHECK(class_number(-3299) == cold);
    cache.set_enabled(true);
    auto const snap = cache.snapshot();
    cache.clear();
    CHECK_FALSE(cache.lookup(-3299));
    cache.load(snap);
    CHECK(cache.lookup(-3299) == cold);
}

TEST_CASE("hurwitz class numbers")
{
    CHECK(hurwitz(0) == make_rat(-1, 12));
    CHECK(hurwitz(3) == make_rat(1, 3));
    CHECK(hurwitz(4) == make_rat(1, 2));
    CHECK(hurwitz(2) == 0);
    CHECK(hurwitz(1) == 0);
    CHECK(hurwitz(12) == make_rat(4, 3));
    CHECK_THROWS_WITH(hurwitz(-1), "undefined");
    for (std::int64_t n = 0; n <= 3000; ++n)
        REQUIRE_MESSAGE(hurwitz(n) == oracle::hurwitz(n), "n=" << n);
    CHECK(unit_weight(-3) == 3);
    CHECK(unit_weight(-4) == 2);
    CHECK(unit_weight(-12) == 1);
}

TEST_CASE("hurwitz-kronecker relation")
{
    for (std::int64_t n = 1; n <= 300; ++n) {
        mpq_class lhs = 0;
        for (std::int64_t x = -2 * n; x <= 2 * n; ++x)
            if (x * x <= 4 * n)
                lhs += oracle::hurwitz(4 * n - x * x);
        for (std::int64_t d = 1; d <= n; ++d)
            if (n % d == 0)
                lhs += std::min(d, n / d);
        REQUIRE(lhs == 2 * oracle::sigma(n));
    }
}

TEST_CASE("residues mod 4")
{
    CHECK(represents_only_0_1_mod4({5, 0, 8}));
    CHECK_FALSE(represents_only_0_1_mod4({3, 0, 8}));
    CHECK_FALSE(represents_only_0_1_mod4({4, 4, 7}));
    // agreement with a plain scan of values
    for (std::int64_t a = 1; a <= 12; ++a)
        for (std::int64_t b = -a; b <= a; ++b)
            for (std::int64_t c = a; c <= 14; ++c) {
                BQF const q{a, b, c};
                if (!q.is_positive_definite())
                    continue;
                bool scan = true;
                for (std::int64_t x = -6; x <= 6; ++x)
                    for (std::int64_t y = -6; y <= 6; ++y)
                        scan = scan && (mod(q(x, y), 4) <= 1);
                REQUIRE(represents_only_0_1_mod4(q) == scan);
            }
}

TEST_CASE("GL2 classes")
{
    CHECK(gl2_classes({{4, 4, 11}, {4, -4, 11}}).size() == 1);
    CHECK(gl2_classes({{1, 0, 40}}) == std::vector<BQF>{{1, 0, 40}});
    // (1,0,40), (4,4,11), (5,0,8), (7,6,7): the class group is (Z/2)^2, so every
    // class is its own reflection and no two merge
    CHECK(reduced_forms(-160, true) == std::vector<BQF>{{1, 0, 40}, {4, 4, 11}, {5, 0, 8}, {7, 6, 7}});
    CHECK(gl2_classes(reduced_forms(-160, true)).size() == 4);
    CHECK(gl2_classes(reduced_forms(-23, true)).size() == 2);
    CHECK(gl2_canonical({4, -4, 11}) == gl2_canonical({4, 4, 11}));
    CHECK(gl2_canonical({5, -2, 21}) == BQF{5, 2, 21});
    CHECK(is_ambiguous({5, 0, 8}));
    CHECK(is_ambiguous({1, 0, 40}));
    CHECK_FALSE(is_ambiguous({5, 2, 21}));
}

TEST_CASE("lattice point enumeration is exact")
{
    for (BQF const q : {BQF{5, 0, 8}, BQF{5, 4, 12}, BQF{12, 12, 13}, BQF{1, 1, 1}, BQF{8, 4, 8}}) {
        for (std::int64_t bound : {0, 1, 7, 40, 123, 400}) {
            std::set<std::pair<std::int64_t, std::int64_t>> got;
            for_each_point_below(q, bound, [&](std::int64_t x, std::int64_t y, std::int64_t v) {
                REQUIRE(v == q(x, y));
                REQUIRE(v <= bound);
                got.insert({x, y});
            });
            std::set<std::pair<std::int64_t, std::int64_t>> brute;
            for (std::int64_t x = -60; x <= 60; ++x)
                for (std::int64_t y = -60; y <= 60; ++y)
                    if (q(x, y) <= bound)
                        brute.insert({x, y});
            REQUIRE(got == brute);
        }
    }
    CHECK(represented_values({5, 0, 8}, 30) == std::vector<std::int64_t>{5, 8, 13, 20, 28});
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "humbert/arith.hpp"
#include "oracles.hpp"

using namespace humbert;

TEST_CASE("factor small examples")
{
    CHECK(factor(1).empty());
    CHECK(factor(160).pairs() == std::vector<PrimePower>{{2, 5}, {5, 1}});
    CHECK(factor(9991).pairs() == std::vector<PrimePower>{{97, 1}, {103, 1}});
    CHECK(factor(160).primes() == std::vector<std::int64_t>{2, 5});
}

TEST_CASE("factor agrees with trial division and round-trips")
{
    for (std::int64_t n = 1; n <= 100000; ++n) {
        auto const f = factor(n);
        REQUIRE(f.value() == n);
        auto const o = oracle::factor(n);
        REQUIRE(f.pairs().size() == o.size());
        for (std::size_t i = 0; i < o.size(); ++i) {
            REQUIRE(f.pairs()[i].prime == o[i].first);
            REQUIRE(f.pairs()[i].exponent == o[i].second);
        }
    }
}

TEST_CASE("factor rejects bad input")
{
    CHECK_THROWS_AS(factor(0), MathError);
    CHECK_THROWS_AS(factor(-6), MathError);
    CHECK_THROWS_WITH(factor(1'000'001, 1'000'000), "input too large");
    CHECK(factor(999'999'999'989).pairs() == std::vector<PrimePower>{{999'999'999'989, 1}});
}

TEST_CASE("is_prime")
{
    for (std::int64_t n = -5; n < 20000; ++n)
        REQUIRE(is_prime(n) == (n > 1 && oracle::factor(n).size() == 1 && oracle::factor(n)[0].second == 1));
    CHECK(is_prime(1'000'000'007));
    CHECK(is_prime(2'305'843'009'213'693'951)); // 2^61 - 1
    CHECK_FALSE(is_prime(561));
    CHECK_FALSE(is_prime(3'215'031'751)); // strong pseudoprime to 2, 3, 5, 7
    CHECK_FALSE(is_prime(3'825'123'056'546'413'051));
}

TEST_CASE("kronecker examples")
{
    for (std::int64_t n : {1, 2, 3, 7, 100, -5})
        CHECK(kronecker(1, n) == 1);
    CHECK(kronecker(-8, 5) == -1);
    CHECK(kronecker(-3, 2) == -1);
    CHECK(kronecker(5, 2) == -1);
    CHECK(kronecker(7, 2) == 1);
    CHECK(kronecker(-8, 2) == 0);
    CHECK(kronecker(3, 0) == 0);
    CHECK(kronecker(-1, 0) == 1);
}

TEST_CASE("kronecker matches the multiplicative definition")
{
    for (std::int64_t a = -80; a <= 80; ++a)
        for (std::int64_t n = -80; n <= 80; ++n)
            REQUIRE_MESSAGE(kronecker(a, n) == oracle::kronecker(a, n), "a=" << a << " n=" << n);
}

TEST_CASE("fundamental decomposition")
{
    CHECK(fundamental_decomposition(-3) == FundamentalDecomposition{-3, 1});
    CHECK(fundamental_decomposition(-12) == FundamentalDecomposition{-3, 2});
    CHECK(fundamental_decomposition(-160) == FundamentalDecomposition{-40, 2});
    CHECK(fundamental_decomposition(-4) == FundamentalDecomposition{-4, 1});
    CHECK(fundamental_decomposition(-16) == FundamentalDecomposition{-4, 2});
    CHECK_THROWS_WITH(fundamental_decomposition(-2), "not a discriminant");
    CHECK_THROWS_WITH(fundamental_decomposition(5), "not a discriminant");

    for (std::int64_t d = -1; d >= -20000; --d) {
        if (!is_discriminant(d))
            continue;
        auto const [d0, f] = fundamental_decomposition(d);
        REQUIRE(f * f * d0 == d);
        REQUIRE(is_fundamental(d0));
        REQUIRE(f > 0);
    }
    // fundamental: squarefree d = 1 mod 4, or 4m with m = 2, 3 mod 4 squarefree
    for (std::int64_t d = -1; d >= -5000; --d) {
        bool expected = false;
        if (((d % 4) + 4) % 4 == 1)
            expected = oracle::squarefree(-d);
        else if (d % 4 == 0) {
            std::int64_t const m = d / 4, r = ((m % 4) + 4) % 4;
            expected = (r == 2 || r == 3) && oracle::squarefree(-m);
        }
        REQUIRE(is_fundamental(d) == expected);
    }
}

TEST_CASE("sigma, squarefree, divisors, isqrt")
{
    CHECK(sigma(1) == 1);
    CHECK(sigma(6) == 12);
    CHECK(sigma(100) == 217);
    for (std::int64_t n = 1; n <= 500; ++n)
        REQUIRE(sigma(n) == oracle::sigma(n));
    CHECK(is_squarefree(10));
    CHECK_FALSE(is_squarefree(12));
    CHECK(is_squarefree(1));
    for (std::int64_t n = 1; n <= 2000; ++n)
        REQUIRE(is_squarefree(n) == oracle::squarefree(n));
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<std::int64_t>{1});
    for (std::int64_t n = 0; n <= 10000; ++n) {
        std::int64_t const r = isqrt(n);
        REQUIRE(r * r <= n);
        REQUIRE((r + 1) * (r + 1) > n);
    }
    CHECK(isqrt(4'000'000'000'000'000'000) == 2'000'000'000);
}

TEST_CASE("rational text round trip")
{
    CHECK(to_string(make_rat(10, 3)) == "10/3");
    CHECK(to_string(make_rat(-4, 12)) == "-1/3");
    CHECK(to_string(make_rat(6, 3)) == "2");
    CHECK(parse_rat("4/6") == make_rat(2, 3));
    CHECK(parse_rat("-7") == make_rat(-7));
    for (std::int64_t p = -30; p <= 30; ++p)
        for (std::int64_t q = 1; q <= 12; ++q)
            REQUIRE(parse_rat(to_string(make_rat(p, q))) == make_rat(p, q));
    CHECK_THROWS_AS(parse_rat("1/0"), MathError);
    CHECK_THROWS_AS(parse_rat("abc"), MathError);
    CHECK_THROWS_AS(parse_rat("1/"), MathError);
}

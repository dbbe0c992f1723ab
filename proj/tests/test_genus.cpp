#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "humbert/genus.hpp"
#include "oracles.hpp"

using namespace humbert;

TEST_CASE("coprime values")
{
    auto const v = find_coprime_value({5, 0, 8}, 10);
    CHECK(v.a == 13);
    CHECK(v.x == 1);
    CHECK(v.y == 1);
    auto const w = find_coprime_value({1, 0, 40}, 10);
    CHECK(w.a == 1);
    CHECK(w.x == 1);
    CHECK(w.y == 0);
    CHECK(find_coprime_value({1, 1, 1}, 3).a == 1);
    // every value of 2x^2 + 2xy + 2y^2 is even
    CHECK_THROWS_WITH(find_coprime_value({2, 2, 2}, 1, 5), "no coprime representation found");
}

TEST_CASE("genus characters")
{
    CHECK(genus_character({5, 0, 8}, 5, 10) == -1);
    CHECK(genus_character({5, 0, 8}, 2, 10) == -1);
    CHECK(genus_character({1, 0, 40}, 5, 10) == 1);
    CHECK(chi_minus4({5, 0, 8}, 10) == 1);
}

TEST_CASE("characters do not depend on the chosen value")
{
    // every value of Q coprime to 2 D0 gives the same character
    for (std::int64_t d0 = 1; d0 <= 50; ++d0) {
        if (!is_squarefree(d0))
            continue;
        for (auto const& f : eligible_forms(d0)) {
            BQF const q = f.character_form();
            for (auto [p, chi] : f.chars) {
                for (std::int64_t x = -6; x <= 6; ++x)
                    for (std::int64_t y = -6; y <= 6; ++y) {
                        std::int64_t const a = q(x, y);
                        if (a == 0 || std::gcd(a, 2 * d0) != 1)
                            continue;
                        int const expected = p == 2 ? oracle::kronecker(8, a) : oracle::legendre(a, p);
                        REQUIRE_MESSAGE(expected == chi, "D0=" << d0 << " Q=" << q << " p=" << p);
                    }
            }
        }
    }
}

TEST_CASE("eligible forms for small D0")
{
    auto const ten = eligible_forms(10);
    REQUIRE(ten.size() == 2);
    CHECK(ten[0].form == BQF{1, 0, 40});
    CHECK(ten[0].D == 1);
    CHECK(ten[0].N == 10);
    CHECK(ten[1].form == BQF{5, 0, 8});
    CHECK(ten[1].D == 10);
    CHECK(ten[1].N == 1);
    CHECK(atkin_lehner_group_order(ten[0]) == 4);
    CHECK(atkin_lehner_group_order(ten[1]) == 4);

    // 5x^2 + 2xy + 5y^2 has discriminant -96 and takes only the values 0, 1 mod 4
    auto const six = eligible_forms(6);
    REQUIRE(six.size() == 2);
    CHECK(six[0].form == BQF{1, 0, 24});
    CHECK(six[0].D == 1);
    CHECK(six[1].form == BQF{5, 2, 5});
    CHECK(six[1].D == 6);
    CHECK(six[1].N == 1);

    auto const fifteen = eligible_forms(15);
    bool saw_four = false;
    for (auto const& f : fifteen)
        if (f.kind == FormKind::four_times_primitive && f.D > 1) {
            saw_four = true;
            CHECK(f.form == BQF{8, 4, 8});
            CHECK(f.D == 15);
            CHECK(f.character_form() == BQF{2, 1, 2});
        }
    CHECK(saw_four);

    auto const fourteen = eligible_forms(14);
    bool saw_non_ambiguous = false;
    for (auto const& f : fourteen)
        if (f.form == BQF{5, 4, 12}) {
            saw_non_ambiguous = true;
            CHECK_FALSE(f.ambiguous);
            CHECK(atkin_lehner_group_order(f) == 2);
        }
    CHECK(saw_non_ambiguous);

    CHECK_THROWS_WITH(eligible_forms(12), "D0 must be squarefree");
    CHECK_THROWS_AS(eligible_forms(0), MathError);
    CHECK_THROWS_AS(eligible_forms(-5), MathError);
}

TEST_CASE("eligible form invariants")
{
    for (std::int64_t d0 = 1; d0 <= 50; ++d0) {
        if (!is_squarefree(d0))
            continue;
        auto const forms = eligible_forms(d0);
        REQUIRE_FALSE(forms.empty());
        for (auto const& f : forms) {
            REQUIRE(f.form.disc() == -16 * d0);
            REQUIRE(f.form.is_reduced());
            REQUIRE(f.form == gl2_canonical(f.form));
            REQUIRE(represents_only_0_1_mod4(f.form));
            REQUIRE(f.D * f.N == d0);
            REQUIRE(std::gcd(f.D, f.N) == 1);
            int minus = 0;
            for (auto [p, chi] : f.chars) {
                REQUIRE(d0 % p == 0);
                minus += chi == -1;
                REQUIRE((chi == -1) == (f.D % p == 0));
            }
            REQUIRE(f.chars.size() == oracle::factor(d0).size());
            REQUIRE(minus % 2 == 0);
            if (f.kind == FormKind::primitive)
                REQUIRE(chi_minus4(f.form, d0) == 1);
            REQUIRE(f.ambiguous == (reduce(f.form.reflected()) == f.form));
            REQUIRE(atkin_lehner_group_order(f) == (f.ambiguous ? 4 : 2));
            if (f.kind == FormKind::four_times_primitive) {
                REQUIRE(f.form.content() == 4);
                REQUIRE(d0 % 4 == 3);
            } else {
                REQUIRE(f.form.content() == 1);
            }
        }
        // every GL2 class of the discriminant that passes the residue test is listed
        std::size_t expected = 0;
        for (auto const& q : gl2_classes(reduced_forms(-16 * d0, false)))
            if (represents_only_0_1_mod4(q) && (q.content() == 1 || q.content() == 4))
                ++expected;
        REQUIRE(forms.size() == expected);
    }
}

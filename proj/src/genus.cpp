#include "humbert/genus.hpp"

#include <numeric>

namespace humbert {

CoprimeValue find_coprime_value(BQF const& q, std::int64_t m, std::int64_t height_bound)
{
    if (!q.is_positive_definite())
        throw MathError("not positive definite");
    if (m < 1)
        throw MathError("find_coprime_value: m must be positive");
    std::int64_t const modulus = 2 * m;
    auto accept = [&](std::int64_t x, std::int64_t y) {
        std::int64_t const v = q(x, y);
        return v > 0 && std::gcd(v, modulus) == 1;
    };
    for (std::int64_t r = 1; r <= height_bound; ++r) {
        // (r,0) .. (r,r) .. (-r,r) .. (-r,-r) .. (r,-r) .. (r,-1)
        std::int64_t x = r, y = 0;
        auto const visit = [&](std::int64_t dx, std::int64_t dy, std::int64_t steps) -> bool {
            for (std::int64_t i = 0; i < steps; ++i) {
                if (accept(x, y))
                    return true;
                x += dx;
                y += dy;
            }
            return false;
        };
        if (visit(0, 1, r) || visit(-1, 0, 2 * r) || visit(0, -1, 2 * r) || visit(1, 0, 2 * r)
            || visit(0, 1, r))
            return {x, y, q(x, y)};
    }
    throw MathError("no coprime representation found");
}

int genus_character(BQF const& q, std::int64_t p, std::int64_t d0)
{
    if (d0 % p != 0)
        throw MathError("genus_character: p must divide D0");
    std::int64_t const a = find_coprime_value(q, d0).a;
    return p == 2 ? kronecker(8, a) : kronecker(a, p);
}

int chi_minus4(BQF const& q, std::int64_t d0)
{
    return kronecker(-4, find_coprime_value(q, d0).a);
}

std::vector<EligibleForm> eligible_forms(std::int64_t d0)
{
    if (d0 < 1 || !is_squarefree(d0))
        throw MathError("D0 must be squarefree");
    if (d0 > 10'000'000)
        throw MathError("input too large");
    std::vector<BQF> passing;
    for (auto const& q : reduced_forms(-16 * d0, false))
        if (represents_only_0_1_mod4(q))
            passing.push_back(q);

    std::vector<EligibleForm> out;
    auto const primes = factor(d0).primes();
    for (auto const& q : gl2_classes(passing)) {
        EligibleForm f;
        f.form = q;
        f.d0 = d0;
        std::int64_t const content = q.content();
        if (content == 1) {
            f.kind = FormKind::primitive;
        } else if (content == 4) {
            if (mod(d0, 4) != 3)
                throw std::logic_error("form 4Q' with D0 not 3 mod 4");
            f.kind = FormKind::four_times_primitive;
        } else {
            throw std::logic_error("eligible form with content " + std::to_string(content));
        }
        BQF const base = f.character_form();
        std::int64_t const a = find_coprime_value(base, d0).a;
        for (std::int64_t p : primes) {
            int const chi = p == 2 ? kronecker(8, a) : kronecker(a, p);
            f.chars[p] = chi;
            (chi == -1 ? f.D : f.N) *= p;
        }
        if (factor(f.D).pairs().size() % 2 != 0)
            throw std::logic_error("odd number of ramified primes for " + to_string(q));
        f.ambiguous = is_ambiguous(q);
        out.push_back(std::move(f));
    }
    return out;
}

int atkin_lehner_group_order(EligibleForm const& f)
{
    return f.ambiguous ? 4 : 2;
}

} // namespace humbert

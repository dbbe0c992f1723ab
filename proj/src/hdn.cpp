#include "humbert/hdn.hpp"

#include <numeric>

#include "humbert/bqf.hpp"

namespace humbert {

ShimuraLevel::ShimuraLevel(std::int64_t D, std::int64_t N) : D_(D), N_(N)
{
    if (D < 1 || N < 1)
        throw MathError("D and N must be positive");
    if (std::gcd(D, N) != 1)
        throw MathError("D and N must be coprime");
    if (!is_squarefree(D) || !is_squarefree(N))
        throw MathError("D and N must be squarefree");
    if (factor(D).pairs().size() % 2 != 0)
        throw MathError("D must have an even number of prime factors");
}

int local_embedding_count(ShimuraLevel const& level, std::int64_t d, std::int64_t q)
{
    if (!is_prime(q))
        throw MathError("q must be prime");
    auto const [d0, f] = fundamental_decomposition(d);
    bool const q_divides_f = f % q == 0;
    if (level.D() % q == 0)
        return q_divides_f ? 0 : 1 - kronecker(d0, q);
    if (level.N() % q == 0)
        return q_divides_f ? 2 : 1 + kronecker(d0, q);
    return 1;
}

std::int64_t h_dn(ShimuraLevel const& level, std::int64_t d)
{
    std::int64_t count = class_number(d);
    for (std::int64_t q : factor(level.d0()).primes()) {
        if (count == 0)
            break;
        count *= local_embedding_count(level, d, q);
    }
    return count;
}

Rat h_dn_zero(ShimuraLevel const& level)
{
    Rat v = make_rat(-level.d0(), 12);
    for (std::int64_t p : factor(level.D()).primes())
        v *= make_rat(p - 1, p);
    for (std::int64_t p : factor(level.N()).primes())
        v *= make_rat(p + 1, p);
    return v;
}

Rat big_h_dn(ShimuraLevel const& level, std::int64_t m)
{
    if (m < 0)
        throw MathError("negative argument");
    if (m == 0)
        return h_dn_zero(level);
    if (!is_discriminant(-m))
        return 0;
    auto const [d0, f] = fundamental_decomposition(-m);
    int omega = 0;
    for (std::int64_t p : factor(level.d0()).primes())
        if (m % p != 0)
            ++omega;
    Rat sum = 0;
    for (std::int64_t r : divisors(f)) {
        std::int64_t const d = r * r * d0;
        sum += make_rat(h_dn(level, d), unit_weight(d));
    }
    mpq_div_2exp(sum.get_mpq_t(), sum.get_mpq_t(), static_cast<mp_bitcnt_t>(omega));
    return sum;
}

Rat big_h_dn(ShimuraLevel const& level, Rat const& m)
{
    if (m < 0)
        throw MathError("negative argument");
    if (m.get_den() != 1)
        return 0;
    Int const& num = m.get_num();
    if (!num.fits_slong_p())
        throw MathError("input too large");
    return big_h_dn(level, static_cast<std::int64_t>(num.get_si()));
}

Rat const& HdnTable::operator()(std::int64_t m)
{
    if (m == 0)
        return zero_;
    auto it = memo_.find(m);
    if (it == memo_.end())
        it = memo_.emplace(m, big_h_dn(level_, m)).first;
    return it->second;
}

} // namespace humbert

#include "humbert/arith.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>

namespace humbert {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 e, u64 m)
{
    u64 r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

} // namespace

std::vector<std::int64_t> Factorization::primes() const
{
    std::vector<std::int64_t> out;
    out.reserve(pairs_.size());
    for (auto const& pp : pairs_)
        out.push_back(pp.prime);
    return out;
}

std::int64_t Factorization::value() const
{
    std::int64_t v = 1;
    for (auto const& pp : pairs_)
        for (int i = 0; i < pp.exponent; ++i)
            v *= pp.prime;
    return v;
}

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    static constexpr std::array<u64, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : witnesses) {
        if (static_cast<u64>(n) % p == 0)
            return static_cast<u64>(n) == p;
    }
    u64 const m = static_cast<u64>(n);
    u64 d = m - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (u64 a : witnesses) {
        u64 x = powmod(a, d, m);
        if (x == 1 || x == m - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, m);
            if (x == m - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

Factorization factor(std::int64_t n, std::int64_t bound)
{
    if (n < 1)
        throw MathError("factor: argument must be positive");
    if (n > bound)
        throw MathError("input too large");
    std::vector<PrimePower> pairs;
    auto take = [&](std::int64_t p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e)
            pairs.push_back({p, e});
    };
    take(2);
    take(3);
    for (std::int64_t p = 5; p * p <= n; p += 6) {
        take(p);
        take(p + 2);
    }
    if (n > 1) {
        if (!is_prime(n))
            throw MathError("factor: primality certification failed");
        pairs.push_back({n, 1});
    }
    return Factorization(std::move(pairs));
}

int kronecker(std::int64_t a, std::int64_t n)
{
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0)
        return 0;

    int sign = 1;
    // strip the power of two from n; (a|2) = 0, 1, -1 for a even, +-1, +-3 mod 8
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    if (v & 1) {
        std::int64_t r = mod(a, 8);
        if (r == 3 || r == 5)
            sign = -sign;
    }
    if (n < 0) {
        n = -n;
        if (a < 0)
            sign = -sign;
    }
    // Jacobi symbol (a|n), n odd positive
    std::int64_t x = mod(a, n);
    std::int64_t y = n;
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            std::int64_t r = y % 8;
            if (r == 3 || r == 5)
                sign = -sign;
        }
        std::swap(x, y);
        if (x % 4 == 3 && y % 4 == 3)
            sign = -sign;
        x %= y;
    }
    return y == 1 ? sign : 0;
}

bool is_discriminant(std::int64_t d)
{
    std::int64_t r = mod(d, 4);
    return r == 0 || r == 1;
}

bool is_fundamental(std::int64_t d)
{
    if (d == 0 || d == 1 || !is_discriminant(d))
        return false;
    std::int64_t ad = std::llabs(d);
    if (mod(d, 4) == 1)
        return is_squarefree(ad);
    std::int64_t m = d / 4;
    std::int64_t r = mod(m, 4);
    return (r == 2 || r == 3) && is_squarefree(std::llabs(m));
}

FundamentalDecomposition fundamental_decomposition(std::int64_t d)
{
    if (d >= 0 || !is_discriminant(d))
        throw MathError("not a discriminant");
    std::int64_t f = 1;
    for (auto const& pp : factor(-d).pairs())
        for (int i = 0; i < pp.exponent / 2; ++i)
            f *= pp.prime;
    std::int64_t d0 = d / (f * f);
    // d0 is squarefree-times-sign here; fold a factor 4 back when needed
    if (mod(d0, 4) != 1) {
        d0 *= 4;
        f /= 2;
    }
    return {d0, f};
}

std::int64_t sigma(std::int64_t n)
{
    std::int64_t s = 1;
    for (auto const& pp : factor(n).pairs()) {
        std::int64_t term = 1, pk = 1;
        for (int i = 0; i < pp.exponent; ++i) {
            pk *= pp.prime;
            term += pk;
        }
        s *= term;
    }
    return s;
}

bool is_squarefree(std::int64_t n)
{
    if (n < 1)
        throw MathError("is_squarefree: argument must be positive");
    for (auto const& pp : factor(n).pairs())
        if (pp.exponent > 1)
            return false;
    return true;
}

std::vector<std::int64_t> divisors(std::int64_t n)
{
    std::vector<std::int64_t> out{1};
    for (auto const& pp : factor(n).pairs()) {
        std::size_t const size = out.size();
        std::int64_t pk = 1;
        for (int i = 0; i < pp.exponent; ++i) {
            pk *= pp.prime;
            for (std::size_t j = 0; j < size; ++j)
                out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t isqrt(std::int64_t n)
{
    if (n < 0)
        throw MathError("isqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), Int(static_cast<long>(n)).get_mpz_t());
    return r.get_si();
}

Rat make_rat(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw MathError("zero denominator");
    Rat r(Int(static_cast<long>(num)), Int(static_cast<long>(den)));
    r.canonicalize();
    return r;
}

std::string to_string(Rat const& r)
{
    return r.get_str();
}

Rat parse_rat(std::string const& text)
{
    auto slash = text.find('/');
    auto parse_int = [&](std::string const& s) {
        Int v;
        if (s.empty() || v.set_str(s, 10) != 0)
            throw MathError("malformed rational: " + text);
        return v;
    };
    Int num = parse_int(text.substr(0, slash));
    Int den = slash == std::string::npos ? Int(1) : parse_int(text.substr(slash + 1));
    if (den == 0)
        throw MathError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

} // namespace humbert

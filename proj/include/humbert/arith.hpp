#pragma once

// Exact integer and rational kernel shared by every other module.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace humbert {

using Int = mpz_class;
using Rat = mpq_class;

/// Raised for every domain error in the library (bad discriminant, input
/// out of range, failed search, ...). The message is the user-facing text.
class MathError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kDefaultFactorBound = 1'000'000'000'000;

struct PrimePower
{
    std::int64_t prime;
    int exponent;

    bool operator==(PrimePower const&) const = default;
};

class Factorization
{
  public:
    Factorization() = default;
    explicit Factorization(std::vector<PrimePower> pairs) : pairs_(std::move(pairs)) {}

    std::vector<PrimePower> const& pairs() const& { return pairs_; }
    // by value on temporaries so that `for (auto pp : factor(n).pairs())` is safe
    std::vector<PrimePower> pairs() && { return std::move(pairs_); }
    std::vector<std::int64_t> primes() const;
    std::int64_t value() const;
    bool empty() const { return pairs_.empty(); }

    bool operator==(Factorization const&) const = default;

  private:
    std::vector<PrimePower> pairs_;
};

/// Deterministic Miller-Rabin, exact for every n < 2^64.
bool is_prime(std::int64_t n);

/// Trial division; throws "input too large" above `bound`.
Factorization factor(std::int64_t n, std::int64_t bound = kDefaultFactorBound);

/// Kronecker symbol (a|n) on the full domain, including n = 2, n = 0 and
/// negative arguments.
int kronecker(std::int64_t a, std::int64_t n);

struct FundamentalDecomposition
{
    std::int64_t d0; ///< fundamental discriminant
    std::int64_t f;  ///< conductor, f > 0, d = f^2 d0

    bool operator==(FundamentalDecomposition const&) const = default;
};

bool is_discriminant(std::int64_t d);
bool is_fundamental(std::int64_t d);
FundamentalDecomposition fundamental_decomposition(std::int64_t d);

std::int64_t sigma(std::int64_t n);
bool is_squarefree(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);

/// Floor of the square root; n >= 0.
std::int64_t isqrt(std::int64_t n);

inline std::int64_t mod(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

Rat make_rat(std::int64_t num, std::int64_t den = 1);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(Rat const& r);

/// Parses "p", "-p" or "p/q"; throws MathError on malformed text or q = 0.
Rat parse_rat(std::string const& text);

} // namespace humbert

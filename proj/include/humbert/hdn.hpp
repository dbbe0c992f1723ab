#pragma once

// Class-number functions of the Shimura curve X_0^D(N): local optimal
// embedding counts, CM-point counts h_{D,N}(d) and the weighted sums H_{D,N}(m).

#include <cstdint>
#include <unordered_map>

#include "humbert/arith.hpp"

namespace humbert {

class ShimuraLevel
{
  public:
    /// Throws unless gcd(D, N) = 1, both squarefree, and D has an even
    /// number of prime factors.
    ShimuraLevel(std::int64_t D, std::int64_t N);

    std::int64_t D() const { return D_; }
    std::int64_t N() const { return N_; }
    std::int64_t d0() const { return D_ * N_; }

    bool operator==(ShimuraLevel const&) const = default;

  private:
    std::int64_t D_;
    std::int64_t N_;
};

/// m(O, d, q) for the Eichler order of level N in the algebra of
/// discriminant D. The symbol is taken at the fundamental part d0 of d.
int local_embedding_count(ShimuraLevel const& level, std::int64_t d, std::int64_t q);

/// Number of CM-points of discriminant d on X_0^D(N).
std::int64_t h_dn(ShimuraLevel const& level, std::int64_t d);

/// -(D0/12) prod_{p|D} (1 - 1/p) prod_{p|N} (1 + 1/p), half the volume of X_0^D(N).
Rat h_dn_zero(ShimuraLevel const& level);

/// H_{D,N}(m) for rational m >= 0; zero unless m = 0 or -m is a negative
/// discriminant.
Rat big_h_dn(ShimuraLevel const& level, Rat const& m);
Rat big_h_dn(ShimuraLevel const& level, std::int64_t m);

/// big_h_dn with a private memo keyed by integer m. Not thread-safe; give
/// each worker its own table.
class HdnTable
{
  public:
    explicit HdnTable(ShimuraLevel level) : level_(level), zero_(h_dn_zero(level)) {}

    ShimuraLevel const& level() const { return level_; }
    Rat const& zero() const { return zero_; }
    Rat const& operator()(std::int64_t m);

  private:
    ShimuraLevel level_;
    Rat zero_;
    std::unordered_map<std::int64_t, Rat> memo_;
};

} // namespace humbert

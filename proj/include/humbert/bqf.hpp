#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "humbert/arith.hpp"

namespace humbert {

/// Integral binary quadratic form a x^2 + b x y + c y^2.
///
/// Note the middle coefficient is b, not 2b: a form written a x^2 + 2b xy + c y^2
/// in the literature is stored here as (a, 2b, c).
struct BQF
{
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    std::int64_t disc() const { return b * b - 4 * a * c; }
    std::int64_t content() const;
    std::int64_t operator()(std::int64_t x, std::int64_t y) const { return a * x * x + b * x * y + c * y * y; }
    bool is_positive_definite() const { return a > 0 && disc() < 0; }
    bool is_reduced() const;
    /// (a, -b, c), i.e. the form composed with (x, y) -> (-x, y).
    BQF reflected() const { return {a, -b, c}; }
    BQF divided(std::int64_t k) const { return {a / k, b / k, c / k}; }

    auto operator<=>(BQF const&) const = default;
};

std::ostream& operator<<(std::ostream& os, BQF const& q);
std::string to_string(BQF const& q);

/// Unique SL(2,Z)-reduced representative; throws unless positive definite.
BQF reduce(BQF q);

bool is_ambiguous(BQF const& q);

std::vector<BQF> reduced_forms(std::int64_t d, bool primitive_only);

/// h(d): number of primitive reduced forms of discriminant d < 0.
std::int64_t class_number(std::int64_t d);

/// H(n) with H(0) = -1/12.
Rat hurwitz(std::int64_t n);

/// e(d) = 3, 2, 1 for d = -3, -4, other (half the unit count of the order).
std::int64_t unit_weight(std::int64_t d);

/// Every value Q(x, y) is 0 or 1 mod 4 (decided on the 16 residue pairs).
bool represents_only_0_1_mod4(BQF const& q);

/// One representative per GL(2,Z)-class; the kept representative is the
/// reduced form of the class with b >= 0. Output is sorted.
std::vector<BQF> gl2_classes(std::vector<BQF> const& forms);

/// Canonical GL(2,Z) representative of a single positive definite form.
BQF gl2_canonical(BQF const& q);

/// Distinct positive values Q(x, y) <= bound, sorted.
std::vector<std::int64_t> represented_values(BQF const& q, std::int64_t bound);

/// Calls fn(x, y, q(x, y)) for every integer point with q(x, y) <= bound,
/// y outermost and ascending, x ascending. The ranges are solved exactly.
template <class Fn>
void for_each_point_below(BQF const& q, std::int64_t bound, Fn&& fn)
{
    if (!q.is_positive_definite())
        throw MathError("not positive definite");
    if (bound < 0)
        return;
    std::int64_t const nd = -q.disc();
    std::int64_t const ymax = isqrt(4 * q.a * bound / nd);
    for (std::int64_t y = -ymax; y <= ymax; ++y) {
        std::int64_t const dx = 4 * q.a * bound - nd * y * y;
        if (dx < 0)
            continue;
        std::int64_t const r = isqrt(dx);
        auto in = [&](std::int64_t x) { return q(x, y) <= bound; };
        // real roots are (-b y +- sqrt(dx)) / 2a; start from a nearby integer and settle exactly
        std::int64_t lo = (-q.b * y - r) / (2 * q.a);
        std::int64_t hi = (-q.b * y + r) / (2 * q.a);
        while (in(lo - 1))
            --lo;
        while (lo <= hi && !in(lo))
            ++lo;
        while (in(hi + 1))
            ++hi;
        while (hi >= lo && !in(hi))
            --hi;
        for (std::int64_t x = lo; x <= hi; ++x)
            fn(x, y, q(x, y));
    }
}

/// Memo of class numbers shared by all threads. Entries are immutable once
/// stored; readers and writers may run concurrently.
class ClassNumberCache
{
  public:
    static ClassNumberCache& instance();

    std::optional<std::int64_t> lookup(std::int64_t d) const;
    void store(std::int64_t d, std::int64_t h);
    void load(std::map<std::int64_t, std::int64_t> const& entries);
    std::map<std::int64_t, std::int64_t> snapshot() const;
    void clear();
    void set_enabled(bool on);
    bool enabled() const;

  private:
    mutable std::shared_mutex mutex_;
    std::map<std::int64_t, std::int64_t> entries_;
    bool enabled_ = true;
};

} // namespace humbert

#include "humbert/bqf.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace humbert {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

void require_discriminant(std::int64_t d)
{
    if (d >= 0 || !is_discriminant(d))
        throw MathError("not a discriminant");
}

} // namespace

std::int64_t BQF::content() const
{
    return std::gcd(std::gcd(a, b), c);
}

bool BQF::is_reduced() const
{
    if (!is_positive_definite())
        return false;
    if (std::llabs(b) > a || a > c)
        return false;
    if ((std::llabs(b) == a || a == c) && b < 0)
        return false;
    return true;
}

std::ostream& operator<<(std::ostream& os, BQF const& q)
{
    return os << '(' << q.a << ',' << q.b << ',' << q.c << ')';
}

std::string to_string(BQF const& q)
{
    std::ostringstream os;
    os << q;
    return os.str();
}

BQF reduce(BQF q)
{
    if (!q.is_positive_definite())
        throw MathError("not positive definite");
    std::int64_t const d = q.disc();
    for (;;) {
        // translate b into (-a, a]
        std::int64_t const k = floor_div(q.a - q.b, 2 * q.a);
        if (k != 0) {
            q.b += 2 * q.a * k;
            q.c = (q.b * q.b - d) / (4 * q.a);
        }
        if (q.a > q.c) {
            std::swap(q.a, q.c);
            q.b = -q.b;
            continue;
        }
        break;
    }
    if (q.a == q.c && q.b < 0)
        q.b = -q.b;
    return q;
}

bool is_ambiguous(BQF const& q)
{
    BQF const r = reduce(q);
    return reduce(r.reflected()) == r;
}

std::vector<BQF> reduced_forms(std::int64_t d, bool primitive_only)
{
    require_discriminant(d);
    std::vector<BQF> out;
    for (std::int64_t a = 1; 3 * a * a <= -d; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            if (mod(b - d, 2) != 0)
                continue;
            std::int64_t const num = b * b - d;
            if (num % (4 * a) != 0)
                continue;
            BQF const q{a, b, num / (4 * a)};
            if (!q.is_reduced())
                continue;
            if (primitive_only && q.content() != 1)
                continue;
            out.push_back(q);
        }
    }
    return out;
}

std::int64_t class_number(std::int64_t d)
{
    require_discriminant(d);
    auto& cache = ClassNumberCache::instance();
    if (auto hit = cache.lookup(d))
        return *hit;
    auto const h = static_cast<std::int64_t>(reduced_forms(d, true).size());
    cache.store(d, h);
    return h;
}

std::int64_t unit_weight(std::int64_t d)
{
    if (d == -3)
        return 3;
    if (d == -4)
        return 2;
    return 1;
}

Rat hurwitz(std::int64_t n)
{
    if (n < 0)
        throw MathError("undefined");
    if (n == 0)
        return make_rat(-1, 12);
    Rat total = 0;
    for (std::int64_t r = 1; r * r <= n; ++r) {
        if (n % (r * r) != 0)
            continue;
        std::int64_t const d = -n / (r * r);
        if (!is_discriminant(d))
            continue;
        total += make_rat(class_number(d), unit_weight(d));
    }
    return total;
}

bool represents_only_0_1_mod4(BQF const& q)
{
    for (std::int64_t x = 0; x < 4; ++x)
        for (std::int64_t y = 0; y < 4; ++y) {
            std::int64_t const v = mod(q(x, y), 4);
            if (v != 0 && v != 1)
                return false;
        }
    return true;
}

BQF gl2_canonical(BQF const& q)
{
    BQF const r = reduce(q);
    return r.b < 0 ? reduce(r.reflected()) : r;
}

std::vector<BQF> gl2_classes(std::vector<BQF> const& forms)
{
    std::set<BQF> seen;
    for (auto const& q : forms)
        seen.insert(gl2_canonical(q));
    return {seen.begin(), seen.end()};
}

std::vector<std::int64_t> represented_values(BQF const& q, std::int64_t bound)
{
    std::set<std::int64_t> values;
    for_each_point_below(q, bound, [&](std::int64_t, std::int64_t, std::int64_t v) {
        if (v > 0)
            values.insert(v);
    });
    return {values.begin(), values.end()};
}

ClassNumberCache& ClassNumberCache::instance()
{
    static ClassNumberCache cache;
    return cache;
}

std::optional<std::int64_t> ClassNumberCache::lookup(std::int64_t d) const
{
    std::shared_lock lock(mutex_);
    if (!enabled_)
        return std::nullopt;
    auto it = entries_.find(d);
    if (it == entries_.end())
        return std::nullopt;
    return it->second;
}

void ClassNumberCache::store(std::int64_t d, std::int64_t h)
{
    std::unique_lock lock(mutex_);
    if (enabled_)
        entries_.emplace(d, h);
}

void ClassNumberCache::load(std::map<std::int64_t, std::int64_t> const& entries)
{
    std::unique_lock lock(mutex_);
    for (auto const& [d, h] : entries)
        entries_.emplace(d, h);
}

std::map<std::int64_t, std::int64_t> ClassNumberCache::snapshot() const
{
    std::shared_lock lock(mutex_);
    return entries_;
}

void ClassNumberCache::clear()
{
    std::unique_lock lock(mutex_);
    entries_.clear();
}

void ClassNumberCache::set_enabled(bool on)
{
    std::unique_lock lock(mutex_);
    enabled_ = on;
}

bool ClassNumberCache::enabled() const
{
    std::shared_lock lock(mutex_);
    return enabled_;
}

} // namespace humbert

#include "humbert/qseries.hpp"

#include <algorithm>

namespace humbert {

QSeries::QSeries(std::int64_t lead24, std::vector<Int> coeffs)
    : lead24_(lead24), coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw MathError("q-series needs at least one coefficient");
}

QSeries QSeries::one(std::size_t prec)
{
    std::vector<Int> c(prec, 0);
    c.at(0) = 1;
    return {0, std::move(c)};
}

std::vector<Int> QSeries::integer_coefficients() const
{
    if (lead24_ % 24 != 0 || lead24_ < 0)
        throw MathError("q-series has non-integral leading exponent");
    std::size_t shift = static_cast<std::size_t>(lead24_ / 24);
    std::vector<Int> out(shift, 0);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return out;
}

QSeries QSeries::truncated(std::size_t prec) const
{
    if (prec == 0 || prec > coeffs_.size())
        throw MathError("invalid truncation precision");
    return {lead24_, std::vector<Int>(coeffs_.begin(), coeffs_.begin() + prec)};
}

QSeries QSeries::inverse() const
{
    Int const& c0 = coeffs_[0];
    if (c0 != 1 && c0 != -1)
        throw MathError("q-series inversion needs a unit leading coefficient");
    std::size_t const n = coeffs_.size();
    std::vector<Int> inv(n, 0);
    inv[0] = c0; // c0^-1 = c0 for c0 = +-1
    Int acc;
    for (std::size_t k = 1; k < n; ++k) {
        acc = 0;
        for (std::size_t j = 1; j <= k; ++j)
            if (coeffs_[j] != 0)
                acc += coeffs_[j] * inv[k - j];
        inv[k] = -c0 * acc;
    }
    return {-lead24_, std::move(inv)};
}

QSeries operator*(QSeries const& f, QSeries const& g)
{
    std::size_t const n = std::min(f.prec(), g.prec());
    std::vector<Int> c(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (f.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < n; ++j)
            if (g.coeffs_[j] != 0)
                c[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
    return {f.lead24_ + g.lead24_, std::move(c)};
}

namespace {

QSeries combine(QSeries const& f, QSeries const& g, int sign)
{
    std::int64_t const diff = f.lead24() - g.lead24();
    if (diff % 24 != 0)
        throw MathError("incompatible leading exponents");
    std::int64_t const lead24 = std::min(f.lead24(), g.lead24());
    std::int64_t const f_off = (f.lead24() - lead24) / 24;
    std::int64_t const g_off = (g.lead24() - lead24) / 24;
    std::int64_t const end = std::min(f_off + static_cast<std::int64_t>(f.prec()),
                                      g_off + static_cast<std::int64_t>(g.prec()));
    if (end <= 0)
        throw MathError("q-series sum has no known coefficients");
    std::vector<Int> c(static_cast<std::size_t>(end), 0);
    for (std::int64_t k = 0; k < end; ++k) {
        if (k >= f_off)
            c[k] += f[k - f_off];
        if (k >= g_off) {
            if (sign > 0)
                c[k] += g[k - g_off];
            else
                c[k] -= g[k - g_off];
        }
    }
    return {lead24, std::move(c)};
}

} // namespace

QSeries operator+(QSeries const& f, QSeries const& g)
{
    return combine(f, g, +1);
}

QSeries operator-(QSeries const& f, QSeries const& g)
{
    return combine(f, g, -1);
}

QSeries operator*(Int const& k, QSeries const& f)
{
    std::vector<Int> c = f.coeffs_;
    for (auto& x : c)
        x *= k;
    return {f.lead24_, std::move(c)};
}

QSeries theta(std::size_t prec)
{
    if (prec == 0)
        throw MathError("precision must be positive");
    std::vector<Int> c(prec, 0);
    c[0] = 1;
    for (std::size_t k = 1; k * k < prec; ++k)
        c[k * k] = 2;
    return {0, std::move(c)};
}

QSeries eta_power(std::int64_t scale, std::int64_t exponent, std::size_t prec)
{
    if (prec == 0 || scale < 1)
        throw MathError("eta_power needs scale >= 1 and positive precision");
    std::int64_t const e = exponent < 0 ? -exponent : exponent;
    std::vector<Int> c(prec, 0);
    c[0] = 1;
    // multiply in place by (1 - q^step), e times per factor
    for (std::size_t step = static_cast<std::size_t>(scale); step < prec; step += scale)
        for (std::int64_t r = 0; r < e; ++r)
            for (std::size_t k = prec - 1; k >= step; --k)
                c[k] -= c[k - step];
    QSeries product(0, std::move(c));
    if (exponent < 0)
        product = product.inverse();
    return {scale * exponent, product.coeffs()};
}

QSeries cohen_series(std::size_t prec)
{
    QSeries const th = theta(prec);
    QSeries const th5 = th * th * th * th * th;
    QSeries const quotient = eta_power(4, 8, prec) * eta_power(2, -4, prec);
    return th5 - Int(20) * (th * quotient);
}

std::vector<Int> cohen_coefficients(std::int64_t nmax)
{
    if (nmax < 0)
        throw MathError("nmax must be non-negative");
    auto const prec = static_cast<std::size_t>(nmax + 1);
    std::vector<Int> a = cohen_series(prec).integer_coefficients();
    a.resize(prec);
    return a;
}

} // namespace humbert

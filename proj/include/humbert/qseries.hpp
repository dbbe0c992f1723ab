#pragma once

#include <cstdint>
#include <vector>

#include "humbert/arith.hpp"

namespace humbert {

/// Truncated q-expansion  sum_k coeffs[k] q^(lead + k)  with exact integer
/// coefficients. The leading exponent is kept in units of 1/24 so that eta
/// quotients can be built before their exponents combine to an integer.
class QSeries
{
  public:
    QSeries(std::int64_t lead24, std::vector<Int> coeffs);

    static QSeries one(std::size_t prec);

    /// Leading exponent as an exact rational.
    Rat lead() const { return make_rat(lead24_, 24); }
    std::int64_t lead24() const { return lead24_; }
    std::size_t prec() const { return coeffs_.size(); }
    std::vector<Int> const& coeffs() const { return coeffs_; }

    /// Coefficient of q^(lead + k).
    Int const& operator[](std::size_t k) const { return coeffs_[k]; }

    /// Coefficients on the integer grid starting at q^0; throws unless the
    /// leading exponent is a non-negative integer.
    std::vector<Int> integer_coefficients() const;

    QSeries truncated(std::size_t prec) const;
    QSeries inverse() const;

    friend QSeries operator*(QSeries const& f, QSeries const& g);
    friend QSeries operator+(QSeries const& f, QSeries const& g);
    friend QSeries operator-(QSeries const& f, QSeries const& g);
    friend QSeries operator*(Int const& k, QSeries const& f);

    bool operator==(QSeries const&) const = default;

  private:
    std::int64_t lead24_;
    std::vector<Int> coeffs_;
};

/// sum_{n in Z} q^(n^2)
QSeries theta(std::size_t prec);

/// eta(scale z)^exponent = q^(scale exponent / 24) prod_n (1 - q^(scale n))^exponent
QSeries eta_power(std::int64_t scale, std::int64_t exponent, std::size_t prec);

/// theta^5 - 20 theta eta(4z)^8 / eta(2z)^4; 1/120 of this is Cohen's
/// weight 5/2 Eisenstein series.
QSeries cohen_series(std::size_t prec);

/// a_0 .. a_nmax
std::vector<Int> cohen_coefficients(std::int64_t nmax);

} // namespace humbert

#pragma once

// Exact verification of the class number relation for Shimura curves on the
// Siegel threefold, and of the classical Hurwitz-Kronecker relation.

#include <cstdint>
#include <string>
#include <vector>

#include "humbert/genus.hpp"
#include "humbert/hdn.hpp"

namespace humbert {

struct LhsTerm
{
    std::int64_t u;
    std::int64_t v;
    std::int64_t q_value; ///< Q(v, u)
    Rat argument;         ///< D0 n - Q(v, u) / 4
    Rat value;            ///< H_{D,N}(argument)
};

struct LhsOptions
{
    /// Evaluate Q(u, v) instead of Q(v, u); only useful to expose argument
    /// order mistakes on forms with b != 0.
    bool swap_arguments = false;
    /// Keep every nonzero term in LhsResult::terms.
    bool keep_terms = false;
    /// Multiplies the enumeration bound; values > 1 only re-check completeness.
    std::int64_t bound_scale = 1;
};

struct LhsResult
{
    Rat total;
    Rat interior;             ///< terms with Q(v, u) < 4 D0 n
    Rat boundary;             ///< terms with Q(v, u) = 4 D0 n, each H_{D,N}(0)
    std::int64_t visited = 0; ///< lattice points passing the parity filter
    std::int64_t interior_nonzero = 0;
    std::int64_t boundary_count = 0;
    std::vector<LhsTerm> terms;
};

/// sum over u = a n, v = c n (mod 2) of H_{D,N}(D0 n - Q(v, u) / 4).
LhsResult theorem_lhs(EligibleForm const& f, std::int64_t n, LhsOptions const& opts = {});
LhsResult theorem_lhs(EligibleForm const& f, std::int64_t n, HdnTable& table, LhsOptions const& opts = {});

/// sum over all (u, v) of H_{D,N}(D0 n - 4 Q'(u, v)), for Q = 4Q'.
Rat theorem_lhs_rewritten(EligibleForm const& f, std::int64_t n, HdnTable& table);

/// a_n H_{D,N}(0)
Rat theorem_rhs(EligibleForm const& f, std::int64_t n);

struct VerificationRow
{
    std::int64_t d0;
    BQF form;
    std::int64_t D;
    std::int64_t N;
    std::int64_t n;
    Rat lhs;
    Rat rhs;
    Int a_n;
    bool match;
    std::int64_t term_count;
    std::int64_t boundary_count;
};

struct SkippedForm
{
    BQF form;
    std::int64_t D;
    std::int64_t N;
    std::string reason;
};

struct TheoremReport
{
    std::vector<VerificationRow> rows;
    std::vector<SkippedForm> skipped;

    bool all_match() const;
};

struct VerifyOptions
{
    unsigned jobs = 1;
    /// Restrict to the GL(2,Z)-class of this form when set (a = 0 means all).
    BQF only_form{};
};

/// Rows for every eligible form with D > 1 and every n <= nmax, n = 0,1 mod 4,
/// in (form, n) order whatever the number of jobs.
TheoremReport verify_theorem(std::int64_t d0, std::int64_t nmax, VerifyOptions const& opts = {});

struct KroneckerRow
{
    std::int64_t n;
    Rat lhs;
    Rat rhs;
    bool match;
};

/// sum_x H(4n - x^2) + sum_{dd' = n} min(d, d')  against  2 sigma(n), n >= 1.
std::vector<KroneckerRow> verify_kronecker(std::int64_t nmax);

/// Left side of the Hurwitz-Kronecker relation at n >= 0 (n = 0 gives H(0)).
Rat kronecker_lhs(std::int64_t n);

} // namespace humbert

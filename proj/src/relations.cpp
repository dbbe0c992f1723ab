#include "humbert/relations.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "humbert/qseries.hpp"

namespace humbert {

namespace {

void check_theorem_preconditions(EligibleForm const& f, std::int64_t n)
{
    if (f.D <= 1)
        throw MathError("theorem requires D > 1");
    if (n < 1 || !is_discriminant(n))
        throw MathError("n must be 0,1 mod 4");
}

Rat const& lookup(HdnTable& table, Rat const& argument, Rat const& zero_value)
{
    if (argument.get_den() != 1)
        return zero_value;
    return table(argument.get_num().get_si());
}

} // namespace

LhsResult theorem_lhs(EligibleForm const& f, std::int64_t n, LhsOptions const& opts)
{
    HdnTable table(ShimuraLevel(f.D, f.N));
    return theorem_lhs(f, n, table, opts);
}

LhsResult theorem_lhs(EligibleForm const& f, std::int64_t n, HdnTable& table, LhsOptions const& opts)
{
    check_theorem_preconditions(f, n);
    if (opts.bound_scale < 1)
        throw MathError("bound_scale must be positive");
    BQF const& q = f.form;
    std::int64_t const limit = 4 * f.d0 * n;
    Rat const d0n = f.d0 * n;
    Rat const zero = 0;
    LhsResult out;
    for_each_point_below(q, limit * opts.bound_scale, [&](std::int64_t x, std::int64_t y, std::int64_t value) {
        // x is the first argument of Q: v normally, u when swapped
        std::int64_t const u = opts.swap_arguments ? x : y;
        std::int64_t const v = opts.swap_arguments ? y : x;
        if (mod(u - q.a * n, 2) != 0 || mod(v - q.c * n, 2) != 0)
            return;
        ++out.visited;
        if (value > limit)
            return;
        Rat const argument = d0n - make_rat(value, 4);
        Rat const& h = lookup(table, argument, zero);
        if (h == 0)
            return;
        out.total += h;
        if (value == limit) {
            out.boundary += h;
            ++out.boundary_count;
        } else {
            out.interior += h;
            ++out.interior_nonzero;
        }
        if (opts.keep_terms)
            out.terms.push_back({u, v, value, argument, h});
    });
    return out;
}

Rat theorem_lhs_rewritten(EligibleForm const& f, std::int64_t n, HdnTable& table)
{
    check_theorem_preconditions(f, n);
    if (f.kind != FormKind::four_times_primitive)
        throw MathError("rewritten sum needs Q = 4Q'");
    BQF const qp = f.form.divided(4);
    std::int64_t const d0n = f.d0 * n;
    Rat total = 0;
    for_each_point_below(qp, d0n / 4, [&](std::int64_t, std::int64_t, std::int64_t value) {
        total += table(d0n - 4 * value);
    });
    return total;
}

Rat theorem_rhs(EligibleForm const& f, std::int64_t n)
{
    check_theorem_preconditions(f, n);
    Int const a_n = cohen_coefficients(n).back();
    return Rat(a_n) * h_dn_zero(ShimuraLevel(f.D, f.N));
}

bool TheoremReport::all_match() const
{
    return std::all_of(rows.begin(), rows.end(), [](VerificationRow const& r) { return r.match; });
}

TheoremReport verify_theorem(std::int64_t d0, std::int64_t nmax, VerifyOptions const& opts)
{
    if (nmax < 1)
        throw MathError("nmax must be positive");
    TheoremReport report;
    std::vector<EligibleForm> forms;
    for (auto& f : eligible_forms(d0)) {
        if (opts.only_form.a != 0 && gl2_canonical(opts.only_form) != f.form)
            continue;
        if (f.D == 1) {
            report.skipped.push_back(
                {f.form, f.D, f.N, "theorem requires D > 1 (D = 1 is a modular curve with cusps)"});
            continue;
        }
        forms.push_back(std::move(f));
    }
    if (opts.only_form.a != 0 && forms.empty() && report.skipped.empty())
        throw MathError("form " + to_string(opts.only_form) + " is not eligible for D0 = " + std::to_string(d0));

    std::vector<Int> const a = cohen_coefficients(nmax);
    struct Task
    {
        std::size_t form;
        std::int64_t n;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::int64_t n = 1; n <= nmax; ++n)
            if (is_discriminant(n))
                tasks.push_back({i, n});

    std::vector<VerificationRow> rows(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        std::map<std::size_t, HdnTable> tables;
        for (std::size_t k; (k = next.fetch_add(1)) < tasks.size();) {
            auto const& [fi, n] = tasks[k];
            EligibleForm const& f = forms[fi];
            auto it = tables.find(fi);
            if (it == tables.end())
                it = tables.emplace(fi, HdnTable(ShimuraLevel(f.D, f.N))).first;
            HdnTable& table = it->second;
            LhsResult const lhs = theorem_lhs(f, n, table);
            Rat const rhs = Rat(a[n]) * table.zero();
            bool match = lhs.total == rhs;
            if (f.kind == FormKind::four_times_primitive)
                match = match && theorem_lhs_rewritten(f, n, table) == lhs.total;
            rows[k] = {d0, f.form, f.D, f.N, n, lhs.total, rhs, a[n], match, lhs.visited, lhs.boundary_count};
        }
    };
    unsigned const jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(tasks.size())));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }
    report.rows = std::move(rows);
    return report;
}

Rat kronecker_lhs(std::int64_t n)
{
    if (n < 0)
        throw MathError("n must be non-negative");
    Rat total = 0;
    std::int64_t const xmax = isqrt(4 * n);
    for (std::int64_t x = -xmax; x <= xmax; ++x)
        total += hurwitz(4 * n - x * x);
    if (n > 0)
        for (std::int64_t d : divisors(n))
            total += std::min(d, n / d);
    return total;
}

std::vector<KroneckerRow> verify_kronecker(std::int64_t nmax)
{
    if (nmax < 1)
        throw MathError("nmax must be positive");
    std::vector<KroneckerRow> rows;
    rows.reserve(static_cast<std::size_t>(nmax));
    for (std::int64_t n = 1; n <= nmax; ++n) {
        Rat lhs = kronecker_lhs(n);
        Rat rhs = 2 * sigma(n);
        bool const match = lhs == rhs;
        rows.push_back({n, std::move(lhs), std::move(rhs), match});
    }
    return rows;
}

} // namespace humbert

#include "humbert/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "humbert/qseries.hpp"
#include "humbert/quat.hpp"
#include "humbert/relations.hpp"

namespace humbert::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

Json to_json(Int const& v)
{
    if (v.fits_slong_p())
        return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

Json to_json(Rat const& v) { return to_string(v); }

std::string cell_text(Json const& v)
{
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

std::string csv_field(std::string s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"')
            q += '"';
        q += ch;
    }
    return q + "\"";
}

// One command result in a format-neutral shape.
struct Report
{
    std::string command;
    Json params = Json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<Json>> rows;
    bool text_header = true;
    bool all_match = true;
    Json extra = Json::object();
    std::vector<std::string> notes; ///< text only, printed after the rows
    std::vector<std::string> dump;  ///< counterexample terms; stderr in csv
};

void emit(Report const& r, Format format, std::ostream& out, std::ostream& err)
{
    switch (format) {
    case Format::json: {
        Json doc;
        doc["command"] = r.command;
        doc["params"] = r.params;
        Json rows = Json::array();
        for (auto const& row : r.rows) {
            Json obj = Json::object();
            for (std::size_t i = 0; i < r.columns.size(); ++i)
                obj[r.columns[i]] = row[i];
            rows.push_back(std::move(obj));
        }
        doc["rows"] = std::move(rows);
        doc["all_match"] = r.all_match;
        for (auto const& [k, v] : r.extra.items())
            doc[k] = v;
        if (!r.dump.empty())
            doc["counterexample"] = r.dump;
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::csv:
        for (std::size_t i = 0; i < r.columns.size(); ++i)
            out << (i ? "," : "") << csv_field(r.columns[i]);
        out << '\n';
        for (auto const& row : r.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << csv_field(cell_text(row[i]));
            out << '\n';
        }
        for (auto const& line : r.dump)
            err << line << '\n';
        break;
    case Format::text:
        if (r.text_header && r.columns.size() > 1) {
            out << '#';
            for (auto const& c : r.columns)
                out << ' ' << c;
            out << '\n';
        }
        for (auto const& row : r.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? " " : "") << cell_text(row[i]);
            out << '\n';
        }
        for (auto const& line : r.notes)
            out << line << '\n';
        for (auto const& line : r.dump)
            out << line << '\n';
        break;
    }
}

BQF parse_form(std::string const& text)
{
    std::array<std::int64_t, 3> v{};
    std::stringstream in(text);
    std::string part;
    std::size_t k = 0;
    while (std::getline(in, part, ',')) {
        if (k == 3)
            throw UsageError("--form expects a,b,c");
        std::size_t used = 0;
        try {
            v[k] = std::stoll(part, &used);
        } catch (std::exception const&) {
            throw UsageError("--form expects a,b,c");
        }
        if (used != part.size())
            throw UsageError("--form expects a,b,c");
        ++k;
    }
    if (k != 3)
        throw UsageError("--form expects a,b,c");
    return {v[0], v[1], v[2]};
}

std::string chars_text(std::map<std::int64_t, int> const& chars)
{
    std::string s;
    for (auto const& [p, chi] : chars) {
        if (!s.empty())
            s += ';';
        s += std::to_string(p) + ':' + (chi > 0 ? "+1" : "-1");
    }
    return s;
}

Report cmd_cohen(std::int64_t nmax)
{
    if (nmax < 0)
        throw UsageError("--nmax must be non-negative");
    Report r;
    r.command = "cohen";
    r.params["nmax"] = nmax;
    r.columns = {"n", "a_n"};
    r.text_header = false;
    Json coeffs = Json::array();
    auto const a = cohen_coefficients(nmax);
    for (std::size_t n = 0; n < a.size(); ++n) {
        r.rows.push_back({static_cast<std::int64_t>(n), to_json(a[n])});
        coeffs.push_back(to_json(a[n]));
    }
    r.extra["coefficients"] = std::move(coeffs);
    return r;
}

Report cmd_hurwitz(std::int64_t n)
{
    Report r;
    r.command = "hurwitz";
    r.params["n"] = n;
    r.columns = {"n", "H"};
    r.rows.push_back({n, to_json(hurwitz(n))});
    return r;
}

Report cmd_classnum(std::int64_t d)
{
    Report r;
    r.command = "classnum";
    r.params["d"] = d;
    r.columns = {"d", "h"};
    r.rows.push_back({d, class_number(d)});
    return r;
}

// Single-value commands print just the value in text mode.
void value_only(Report& r)
{
    r.text_header = false;
    for (auto& row : r.rows)
        row = {row.back()};
}

Report cmd_hdn(std::int64_t D, std::int64_t N, std::string const& m_text)
{
    Rat m;
    try {
        m = parse_rat(m_text);
    } catch (std::exception const&) {
        throw UsageError("--m expects an integer or p/q");
    }
    ShimuraLevel const level(D, N);
    Report r;
    r.command = "hdn";
    r.params["D"] = D;
    r.params["N"] = N;
    r.params["m"] = to_string(m);
    r.columns = {"D", "N", "m", "H"};
    r.rows.push_back({D, N, to_json(m), to_json(big_h_dn(level, m))});
    return r;
}

Report cmd_forms(std::int64_t d0)
{
    Report r;
    r.command = "forms";
    r.params["d0"] = d0;
    r.columns = {"D0", "a", "b", "c", "kind", "chars", "D", "N", "ambiguous", "W", "theorem"};
    for (auto const& f : eligible_forms(d0)) {
        r.rows.push_back({d0, f.form.a, f.form.b, f.form.c,
                          f.kind == FormKind::primitive ? "Q" : "4Q'", chars_text(f.chars), f.D, f.N,
                          f.ambiguous, atkin_lehner_group_order(f),
                          f.D > 1 ? "applicable" : "theorem not applicable"});
    }
    return r;
}

Report cmd_verify(std::int64_t d0, std::int64_t nmax, std::string const& form_text, unsigned jobs,
                  std::string const& fault)
{
    VerifyOptions opts;
    opts.jobs = jobs;
    if (!form_text.empty())
        opts.only_form = parse_form(form_text);
    TheoremReport report = verify_theorem(d0, nmax, opts);
    if (fault == "rhs" && !report.rows.empty()) {
        auto& row = report.rows.front();
        row.rhs += 1;
        row.match = false;
    } else if (!fault.empty()) {
        throw UsageError("unknown fault " + fault);
    }

    Report r;
    r.command = "verify";
    r.params["d0"] = d0;
    r.params["nmax"] = nmax;
    if (!form_text.empty())
        r.params["form"] = to_string(opts.only_form);
    r.columns = {"D0", "a", "b", "c", "D", "N", "n", "lhs", "rhs", "match"};
    for (auto const& row : report.rows)
        r.rows.push_back({row.d0, row.form.a, row.form.b, row.form.c, row.D, row.N, row.n, to_json(row.lhs),
                          to_json(row.rhs), row.match});
    r.all_match = report.all_match();

    Json skipped = Json::array();
    for (auto const& s : report.skipped) {
        skipped.push_back({{"form", to_string(s.form)}, {"D", s.D}, {"N", s.N}, {"reason", s.reason}});
        r.notes.push_back("# skipped " + to_string(s.form) + " D=" + std::to_string(s.D) +
                          " N=" + std::to_string(s.N) + ": " + s.reason);
    }
    r.extra["skipped"] = std::move(skipped);
    r.notes.push_back(std::string("# all_match ") + (r.all_match ? "true" : "false") + ", " +
                      std::to_string(report.rows.size()) + " rows");

    if (!r.all_match) {
        auto const bad = std::find_if(report.rows.begin(), report.rows.end(),
                                      [](VerificationRow const& row) { return !row.match; });
        for (auto const& f : eligible_forms(d0)) {
            if (f.form != bad->form)
                continue;
            LhsOptions lo;
            lo.keep_terms = true;
            LhsResult const lhs = theorem_lhs(f, bad->n, lo);
            r.dump.push_back("# counterexample D0=" + std::to_string(d0) + " Q=" + to_string(f.form) +
                             " n=" + std::to_string(bad->n) + " lhs=" + to_string(bad->lhs) +
                             " rhs=" + to_string(bad->rhs));
            r.dump.push_back("# u v Q(v,u) argument H");
            for (auto const& t : lhs.terms)
                r.dump.push_back(std::to_string(t.u) + ' ' + std::to_string(t.v) + ' ' +
                                 std::to_string(t.q_value) + ' ' + to_string(t.argument) + ' ' +
                                 to_string(t.value));
        }
    }
    return r;
}

Report cmd_kronecker(std::int64_t nmax)
{
    Report r;
    r.command = "kronecker";
    r.params["nmax"] = nmax;
    r.columns = {"n", "lhs", "rhs", "match"};
    for (auto const& row : verify_kronecker(nmax)) {
        r.rows.push_back({row.n, to_json(row.lhs), to_json(row.rhs), row.match});
        r.all_match = r.all_match && row.match;
    }
    return r;
}

Report cmd_selfcheck(std::vector<std::int64_t> const& d0s)
{
    Report r;
    r.command = "selfcheck";
    r.params["d0"] = d0s;
    r.columns = {"D0", "a", "b", "c", "check", "ok", "detail"};
    for (std::int64_t d0 : d0s) {
        for (auto const& f : eligible_forms(d0)) {
            if (f.D == 1)
                continue;
            for (auto const& c : order_suite(f)) {
                // suite names carry the form as a prefix; the row has it already
                std::string name = c.name;
                std::string const prefix = to_string(f.form) + " ";
                if (name.starts_with(prefix))
                    name.erase(0, prefix.size());
                r.rows.push_back({d0, f.form.a, f.form.b, f.form.c, name, c.ok, c.detail});
                r.all_match = r.all_match && c.ok;
            }
        }
    }
    return r;
}

class CacheSession
{
  public:
    CacheSession(std::string path, std::ostream& err) : path_(std::move(path)), err_(err)
    {
        if (path_.empty())
            return;
        std::ifstream in(path_, std::ios::binary);
        if (!in)
            return;
        std::stringstream buf;
        buf << in.rdbuf();
        std::string problem;
        if (auto entries = parse_cache(buf.str(), problem)) {
            ClassNumberCache::instance().load(*entries);
            loaded_ = std::move(*entries);
        } else {
            err_ << "warning: ignoring cache " << path_ << ": " << problem << '\n';
        }
    }

    void save()
    {
        if (path_.empty())
            return;
        auto const snapshot = ClassNumberCache::instance().snapshot();
        if (snapshot == loaded_)
            return;
        std::string const tmp = path_ + ".tmp." + std::to_string(::getpid());
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out << render_cache(snapshot);
            if (!out) {
                err_ << "warning: could not write cache " << path_ << '\n';
                std::error_code ec;
                std::filesystem::remove(tmp, ec);
                return;
            }
        }
        std::error_code ec;
        std::filesystem::rename(tmp, path_, ec);
        if (ec) {
            err_ << "warning: could not write cache " << path_ << ": " << ec.message() << '\n';
            std::filesystem::remove(tmp, ec);
        }
    }

  private:
    std::string path_;
    std::ostream& err_;
    std::map<std::int64_t, std::int64_t> loaded_;
};

} // namespace

std::optional<std::map<std::int64_t, std::int64_t>> parse_cache(std::string const& text, std::string& problem)
{
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        problem = "not valid JSON";
        return std::nullopt;
    }
    if (!doc.is_object() || !doc.contains("version") || !doc.contains("entries")) {
        problem = "missing version or entries";
        return std::nullopt;
    }
    if (!doc["version"].is_number_integer() || doc["version"].get<std::int64_t>() != 1) {
        problem = "unsupported version";
        return std::nullopt;
    }
    if (!doc["entries"].is_object()) {
        problem = "entries is not an object";
        return std::nullopt;
    }
    std::map<std::int64_t, std::int64_t> entries;
    for (auto const& [key, value] : doc["entries"].items()) {
        std::int64_t d = 0;
        std::size_t used = 0;
        try {
            d = std::stoll(key, &used);
        } catch (std::exception const&) {
            used = 0;
        }
        if (used == 0 || used != key.size() || d >= 0 || !is_discriminant(d)) {
            problem = "bad discriminant key \"" + key + "\"";
            return std::nullopt;
        }
        if (!value.is_number_integer() || value.get<std::int64_t>() < 1) {
            problem = "bad class number for " + key;
            return std::nullopt;
        }
        entries[d] = value.get<std::int64_t>();
    }
    return entries;
}

std::string render_cache(std::map<std::int64_t, std::int64_t> const& entries)
{
    Json doc;
    doc["version"] = 1;
    Json e = Json::object();
    for (auto const& [d, h] : entries)
        e[std::to_string(d)] = h;
    doc["entries"] = std::move(e);
    return doc.dump() + '\n';
}

int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact class number relations for Shimura curves on the Siegel threefold", "humbert"};
    app.require_subcommand(1);

    std::string format_name = "text";
    std::string cache_path;
    unsigned jobs = 1;
    std::string fault;
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--cache", cache_path, "Class-number cache file (default: $HUMBERT_CACHE)");
    app.add_option("--jobs", jobs, "Worker threads for verify")->check(CLI::Range(1u, 1024u));
    app.add_option("--inject-fault", fault)->group("");

    std::int64_t cohen_nmax = 12;
    auto* cohen = app.add_subcommand("cohen", "Coefficients a_0..a_nmax of the Cohen series");
    cohen->add_option("--nmax", cohen_nmax);

    std::int64_t hurwitz_n = 0;
    auto* hurw = app.add_subcommand("hurwitz", "Hurwitz class number H(n)");
    hurw->add_option("n", hurwitz_n)->required();

    std::int64_t class_d = 0;
    auto* classnum = app.add_subcommand("classnum", "Class number h(d) of primitive forms");
    classnum->add_option("d", class_d)->required();

    std::int64_t forms_d0 = 0;
    auto* forms = app.add_subcommand("forms", "Eligible forms of discriminant -16 D0");
    forms->add_option("--d0", forms_d0)->required();

    std::int64_t hdn_D = 1, hdn_N = 1;
    std::string hdn_m;
    auto* hdn = app.add_subcommand("hdn", "H_{D,N}(m)");
    hdn->add_option("--D", hdn_D)->required();
    hdn->add_option("--N", hdn_N)->required();
    hdn->add_option("--m", hdn_m)->required();

    std::int64_t verify_d0 = 0, verify_nmax = 100;
    std::string verify_form;
    auto* verify = app.add_subcommand("verify", "Check the class number relation for every eligible form");
    verify->add_option("--d0", verify_d0)->required();
    verify->add_option("--nmax", verify_nmax);
    verify->add_option("--form", verify_form, "Restrict to one form a,b,c");

    std::int64_t kron_nmax = 1000;
    auto* kron = app.add_subcommand("kronecker", "Check the Hurwitz-Kronecker relation for n <= nmax");
    kron->add_option("--nmax", kron_nmax);

    std::vector<std::int64_t> self_d0 = {10, 15, 21, 33};
    auto* self = app.add_subcommand("selfcheck", "Quaternion order and period matrix property suite");
    self->add_option("--d0", self_d0)->delimiter(',');

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int const code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Format const format = format_name == "json" ? Format::json : format_name == "csv" ? Format::csv : Format::text;
    if (cache_path.empty())
        if (char const* env = std::getenv("HUMBERT_CACHE"))
            cache_path = env;

    try {
        CacheSession cache(cache_path, err);
        Report r;
        if (*cohen)
            r = cmd_cohen(cohen_nmax);
        else if (*hurw)
            r = cmd_hurwitz(hurwitz_n);
        else if (*classnum)
            r = cmd_classnum(class_d);
        else if (*forms)
            r = cmd_forms(forms_d0);
        else if (*hdn)
            r = cmd_hdn(hdn_D, hdn_N, hdn_m);
        else if (*verify)
            r = cmd_verify(verify_d0, verify_nmax, verify_form, jobs, fault);
        else if (*kron)
            r = cmd_kronecker(kron_nmax);
        else
            r = cmd_selfcheck(self_d0);
        if (format == Format::text && (*hurw || *classnum || *hdn))
            value_only(r);
        emit(r, format, out, err);
        cache.save();
        return r.all_match ? kExitOk : kExitMismatch;
    } catch (UsageError const& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (MathError const& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (std::exception const& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

} // namespace humbert::cli

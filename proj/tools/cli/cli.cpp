#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "figulat/audit.hpp"
#include "figulat/combinatorics.hpp"
#include "figulat/errors.hpp"
#include "figulat/facets.hpp"
#include "figulat/lattice.hpp"

namespace figulat::cli {
namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::uint64_t parse_u64(std::string_view s, const std::string& what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw UsageError(what + ": expected a nonnegative integer, got '" + std::string(s) + "'");
    }
    return v;
}

Range checked_range(const std::string& text, const std::string& flag, std::uint64_t min, std::uint64_t max) {
    Range r{};
    try {
        r = parse_range(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag + ": " + e.what());
    }
    if (r.lo < min || r.hi > max) {
        throw UsageError(flag + ": values must lie in [" + std::to_string(min) + ", " + std::to_string(max) + "], got " +
                         text);
    }
    return r;
}

OutputFormat checked_format(const std::string& name) {
    auto f = parse_format(name);
    if (!f) throw UsageError("--format: expected plain-table, csv or json-lines, got '" + name + "'");
    return *f;
}

// Settings every subcommand that enumerates shares.
struct BudgetFlags {
    std::string max_points;
    std::string max_expressions;

    void attach(CLI::App* app) {
        app->add_option("--max-points", max_points, "Lattice point budget per scan (default 10000000)");
        app->add_option("--max-expressions", max_expressions,
                        "Raw chain expression budget per enumeration (default 92897280, i.e. p <= 9)");
    }

    Budget resolve(const Environment& env, Budget b = {}) const {
        if (env.max_points) b.max_points = parse_u64(*env.max_points, "FIGULAT_MAX_POINTS");
        if (!max_points.empty()) b.max_points = parse_u64(max_points, "--max-points");
        if (!max_expressions.empty()) b.max_expressions = parse_u64(max_expressions, "--max-expressions");
        return b;
    }
};

std::string terms_text(const std::vector<CodimensionTerm>& terms) {
    std::string s;
    for (const auto& t : terms) {
        if (!s.empty()) s += ';';
        s += std::to_string(t.l) + ':' + t.facet_count.str() + ':' + t.per_facet_points.str() + ':' +
             t.signed_term.str();
    }
    return s;
}

struct VerifyCommand {
    std::string p, n, route = "all", format = "plain-table";
    unsigned threads = 1;
    BudgetFlags budget;

    int run(std::ostream& out, const Environment& env) const {
        const Range pr = checked_range(p, "--p", 1, kMaxDimension);
        const Range nr = checked_range(n, "--n", 1, kMaxSide);
        const OutputFormat fmt = checked_format(format);
        SweepGrid grid{static_cast<int>(pr.lo), static_cast<int>(pr.hi), nr.lo, nr.hi, {}};
        if (route == "all") {
            grid.routes.assign(std::begin(kAllRoutes), std::end(kAllRoutes));
        } else {
            std::string_view rest = route;
            while (!rest.empty()) {
                const auto comma = rest.find(',');
                const auto name = rest.substr(0, comma);
                auto r = parse_route(name);
                if (!r) throw UsageError("--route: unknown route '" + std::string(name) + "'");
                grid.routes.push_back(*r);
                rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            }
        }
        const auto cells = sweep(grid, budget.resolve(env), threads);
        render(out, fmt, verification_records(cells));

        const bool failed = std::any_of(cells.begin(), cells.end(), [](const SweepCell& c) { return c.report && !c.report->ok; });
        const bool skipped = std::any_of(cells.begin(), cells.end(), [](const SweepCell& c) { return !c.report; });
        if (failed) return kExitIdentityFailure;
        return skipped ? kExitBudget : kExitOk;
    }
};

struct TableCommand {
    std::string kind, m, p, k, n, format = "plain-table";

    const std::string& require(const std::string& v, const char* flag) const {
        if (v.empty()) throw UsageError("table --kind " + kind + " requires " + flag);
        return v;
    }

    int run(std::ostream& out) const {
        const OutputFormat fmt = checked_format(format);
        std::vector<Record> records;
        if (kind == "stirling") {
            const Range mr = checked_range(require(m, "--m"), "--m", 0, kMaxDimension);
            const auto first_j = mr.lo == 0 ? 0 : 1;
            for (auto mi = mr.lo; mi <= mr.hi; ++mi) {
                Record r;
                r.add("m", static_cast<std::int64_t>(mi));
                for (auto j = static_cast<std::uint64_t>(first_j); j <= std::max<std::uint64_t>(mr.hi, 1); ++j) {
                    r.add("S(m," + std::to_string(j) + ")",
                          stirling2_recurrence(static_cast<int>(mi), static_cast<int>(j)).str());
                }
                records.push_back(std::move(r));
            }
        } else if (kind == "facet-counts") {
            const Range pr = checked_range(require(p, "--p"), "--p", 1, kMaxDimension);
            for (auto pi = pr.lo; pi <= pr.hi; ++pi) {
                Record r;
                r.add("p", static_cast<std::int64_t>(pi));
                for (std::uint64_t l = 0; l < pr.hi; ++l) {
                    r.add("c(p," + std::to_string(l) + ")",
                          l < pi ? facet_count(static_cast<int>(pi), static_cast<int>(l)).str() : std::string());
                }
                records.push_back(std::move(r));
            }
        } else if (kind == "figurate") {
            const Range kr = checked_range(require(k, "--k"), "--k", 1, kMaxDimension);
            const Range nr = checked_range(require(n, "--n"), "--n", 1, kMaxSide);
            for (auto ki = kr.lo; ki <= kr.hi; ++ki) {
                Record r;
                r.add("k", static_cast<std::int64_t>(ki));
                for (auto ni = nr.lo; ni <= nr.hi; ++ni) {
                    r.add("F^k_" + std::to_string(ni), figurate(static_cast<int>(ki), ni).str());
                }
                records.push_back(std::move(r));
            }
        } else {
            throw UsageError("--kind: expected stirling, facet-counts or figurate, got '" + kind + "'");
        }
        render(out, fmt, records);
        return kExitOk;
    }
};

struct FacetsCommand {
    int p = 0;
    int l = 0;
    bool with_surjections = false;
    std::uint64_t with_counts = 0;
    std::string format = "plain-table";
    BudgetFlags budget;

    int run(std::ostream& out, const Environment& env) const {
        const OutputFormat fmt = checked_format(format);
        if (p < 1) throw UsageError("--p: must be >= 1");
        if (l < 0 || l >= p) throw UsageError("--l: must lie in [0, p-1]");
        const Budget b = budget.resolve(env);
        std::vector<Record> records;
        for (const auto& f : enumerate_facets(p, l, b)) {
            Record r;
            r.add("facet", f.str());
            r.add("blocks", static_cast<std::int64_t>(f.block_count()));
            if (with_surjections) r.add("surjection", facet_to_surjection(f).str());
            if (with_counts > 0) r.add("points", count_lattice_points(f, with_counts).str());
            records.push_back(std::move(r));
        }
        render(out, fmt, records);
        return kExitOk;
    }
};

struct AuditCommand {
    AuditGrid grid;
    std::string format = "plain-table";
    BudgetFlags budget;

    int run(std::ostream& out, const Environment& env) const {
        const OutputFormat fmt = checked_format(format);
        Budget base;
        base.max_points = kAuditDefaultMaxPoints;
        const auto results = audit(grid, budget.resolve(env, base));
        std::vector<Record> records;
        bool ok = true;
        for (const auto& r : results) {
            ok = ok && r.ok();
            Record rec;
            rec.add("record", std::string("summary"))
                .add("check", r.check)
                .add("cases", static_cast<std::int64_t>(r.cases))
                .add("mismatches", static_cast<std::int64_t>(r.mismatches.size()))
                .add("where", std::string())
                .add("closed_form", std::string())
                .add("oracle", std::string());
            records.push_back(std::move(rec));
            for (const auto& m : r.mismatches) {
                Record diff;
                diff.add("record", std::string("diff"))
                    .add("check", r.check)
                    .add("cases", std::int64_t{1})
                    .add("mismatches", std::int64_t{1})
                    .add("where", m.where)
                    .add("closed_form", m.closed_form)
                    .add("oracle", m.oracle);
                records.push_back(std::move(diff));
            }
        }
        render(out, fmt, records);
        return ok ? kExitOk : kExitIdentityFailure;
    }
};

}  // namespace

Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    Range r{};
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = parse_u64(text, "range");
        } else {
            r.lo = parse_u64(std::string_view(text).substr(0, dots), "range start");
            r.hi = parse_u64(std::string_view(text).substr(dots + 2), "range end");
        }
    } catch (const UsageError& e) {
        throw std::invalid_argument(e.what());
    }
    if (r.lo > r.hi) throw std::invalid_argument("empty range '" + text + "'");
    return r;
}

Environment Environment::from_process() {
    Environment env;
    if (const char* v = std::getenv("FIGULAT_MAX_POINTS")) env.max_points = std::string(v);
    return env;
}

std::vector<Record> verification_records(const std::vector<SweepCell>& cells) {
    std::vector<Record> out;
    out.reserve(cells.size());
    for (const auto& c : cells) {
        Record r;
        r.add("p", static_cast<std::int64_t>(c.p))
            .add("n", static_cast<std::int64_t>(c.n))
            .add("route", std::string(route_name(c.route)));
        if (c.report) {
            const auto& rep = *c.report;
            r.add("status", std::string(rep.ok ? "ok" : "fail"))
                .add("lhs", rep.lhs.str())
                .add("rhs", rep.rhs.str())
                .add("ok", rep.ok)
                .add("enumerated_points", static_cast<std::int64_t>(rep.enumerated_points))
                .add("terms", terms_text(rep.terms))
                .add("first_failure", rep.first_failure ? rep.first_failure->str() : std::string())
                .add("error", std::string());
        } else {
            r.add("status", std::string("skipped"))
                .add("lhs", power(c.n, c.p).str())
                .add("rhs", std::string())
                .add("ok", false)
                .add("enumerated_points", std::int64_t{0})
                .add("terms", std::string())
                .add("first_failure", std::string())
                .add("error", c.error);
        }
        out.push_back(std::move(r));
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
    CLI::App app{"Exact cross-checks of n^p = sum_l (-1)^l c(p,l) F^{p-l}_n", "figulat"};
    app.require_subcommand(1);

    VerifyCommand verify_cmd;
    auto* verify = app.add_subcommand("verify", "Check the identity over a grid of (p, n) by one or more routes");
    verify->add_option("--p", verify_cmd.p, "Dimension range a..b (1 <= p <= 20)")->required();
    verify->add_option("--n", verify_cmd.n, "Side range a..b (n >= 1)")->required();
    verify->add_option("--route", verify_cmd.route, "algebraic, geometric, pointwise, a comma list, or all");
    verify->add_option("--format", verify_cmd.format, "plain-table, csv or json-lines");
    verify->add_option("--threads", verify_cmd.threads, "Worker threads; 0 = hardware concurrency");
    verify_cmd.budget.attach(verify);

    TableCommand table_cmd;
    auto* table = app.add_subcommand("table", "Print S(m,j), c(p,l) or F^k_n tables");
    table->add_option("--kind", table_cmd.kind, "stirling, facet-counts or figurate")->required();
    table->add_option("--m", table_cmd.m, "Row range for stirling");
    table->add_option("--p", table_cmd.p, "Row range for facet-counts");
    table->add_option("--k", table_cmd.k, "Row range for figurate");
    table->add_option("--n", table_cmd.n, "Column range for figurate");
    table->add_option("--format", table_cmd.format, "plain-table, csv or json-lines");

    FacetsCommand facets_cmd;
    auto* facets = app.add_subcommand("facets", "List the codimension-l facets of the p-cube decomposition");
    facets->add_option("--p", facets_cmd.p, "Dimension")->required();
    facets->add_option("--l", facets_cmd.l, "Codimension (number of equalities)")->required();
    facets->add_flag("--with-surjections", facets_cmd.with_surjections, "Add the corresponding surjection");
    facets->add_option("--with-counts", facets_cmd.with_counts, "Add lattice point counts at side n");
    facets->add_option("--format", facets_cmd.format, "plain-table, csv or json-lines");
    facets_cmd.budget.attach(facets);

    AuditCommand audit_cmd;
    auto* audit_sub = app.add_subcommand("audit", "Compare every closed form with its brute-force oracle");
    audit_sub->add_option("--stirling-m-max", audit_cmd.grid.stirling_m_max, "Stirling cross-check bound");
    audit_sub->add_option("--m-max", audit_cmd.grid.m_max, "Surjection and Bell row bound");
    audit_sub->add_option("--k-max", audit_cmd.grid.k_max, "Figurate dimension bound");
    audit_sub->add_option("--figurate-n-max", audit_cmd.grid.figurate_n_max, "Figurate side bound");
    audit_sub->add_option("--facet-p-max", audit_cmd.grid.facet_p_max, "Facet enumeration bound");
    audit_sub->add_option("--geometry-p-max", audit_cmd.grid.geometry_p_max, "Lattice and cover dimension bound");
    audit_sub->add_option("--geometry-n-max", audit_cmd.grid.geometry_n_max, "Lattice and cover side bound");
    audit_sub->add_option("--format", audit_cmd.format, "plain-table, csv or json-lines");
    audit_cmd.budget.attach(audit_sub);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*verify) return verify_cmd.run(out, env);
        if (*table) return table_cmd.run(out);
        if (*facets) return facets_cmd.run(out, env);
        if (*audit_sub) return audit_cmd.run(out, env);
    } catch (const UsageError& e) {
        err << "figulat: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "figulat: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceError& e) {
        err << "figulat: budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        err << "figulat: internal error: " << e.what() << '\n';
        return kExitIdentityFailure;
    }
    return kExitUsage;
}

}  // namespace figulat::cli

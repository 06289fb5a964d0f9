#include "motive/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "motive/catalog.hpp"
#include "motive/completed_series.hpp"
#include "motive/errors.hpp"
#include "motive/ff/census.hpp"
#include "motive/qseries.hpp"
#include "motive/serialization.hpp"

namespace motive::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CommonOptions {
    std::string format = "text";
    std::optional<std::string> budget;
};

mpz_class resolve_budget(const std::optional<std::string> &flag) {
    std::string text;
    if (flag) {
        text = *flag;
    } else if (const char *env = std::getenv(kBudgetEnv); env != nullptr && *env != '\0') {
        text = env;
    } else {
        return mpz_class(static_cast<unsigned long>(ff::default_budget));
    }
    mpz_class value;
    if (value.set_str(text, 10) != 0 || value < 1) {
        throw UsageError("budget must be a positive integer, got '" + text + "'");
    }
    return value;
}

std::uint32_t require_odd_prime(long q) {
    if (q < 3 || q > (1L << 20) || !ff::is_prime(static_cast<std::uint32_t>(q))) {
        throw UsageError("--q must be an odd prime (characteristic 2 is not supported), got " + std::to_string(q));
    }
    return static_cast<std::uint32_t>(q);
}

mpq_class parse_rational(const std::string &text) {
    mpq_class v;
    if (text.empty() || v.set_str(text, 10) != 0 || v.get_den() == 0) {
        throw UsageError("cannot parse rational '" + text + "'");
    }
    v.canonicalize();
    return v;
}

std::string rational_string(const mpq_class &v) { return v.get_str(); }

// ----------------------------------------------------------------- motive

struct MotiveArgs {
    std::string kind;
    std::vector<int> params;
    std::optional<int> expand;
    std::optional<std::string> eval;
};

int cmd_motive(const MotiveArgs &a, const CommonOptions &common, std::ostream &out, std::ostream &err) {
    if (common.format == "csv") {
        throw UsageError("csv output is only available for table commands");
    }
    catalog::MotiveName name{catalog::parse_kind(a.kind), a.params};
    if (name.kind != catalog::MotiveKind::BSO) {
        try {
            name.validate();
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    }
    if (a.expand && *a.expand < 1) {
        throw UsageError("--expand depth must be >= 1");
    }
    const MotiveClass value = catalog::lookup(name);

    json j;
    j["name"] = {{"kind", a.kind}, {"params", a.params}};
    j["class"] = to_json(value);
    j["display"] = value.to_string();
    std::vector<std::string> lines{value.to_string()};

    if (a.expand) {
        const CompletedSeries s = expand_at_infinity(value, *a.expand);
        json e = to_json(s);
        e["display"] = s.to_string();
        j["expansion"] = std::move(e);
        lines.push_back(s.to_string());
    }
    if (a.eval) {
        const mpq_class at = parse_rational(*a.eval);
        try {
            const mpq_class v = value.evaluate(at);
            j["eval"] = {{"at", rational_string(at)}, {"value", rational_string(v)}};
            lines.push_back(rational_string(v));
        } catch (const PoleAtPoint &e) {
            err << "error: " << e.what() << '\n';
            return kUsage;
        } catch (const ZeroBase &e) {
            err << "error: " << e.what() << '\n';
            return kUsage;
        }
    }

    if (common.format == "json") {
        out << j.dump(2) << '\n';
    } else {
        for (const auto &l : lines) {
            out << l << '\n';
        }
    }
    return kPass;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
    std::string target;
    std::optional<int> n_max;
    std::optional<int> n;
    std::optional<int> order_x;
    std::optional<int> order_l;
    long q = 3;
};

struct CheckOutcome {
    std::string label;
    bool pass = false;
    json report;
};

json catalog_report(const std::string &identity, int n_max, std::optional<qseries::Mismatch> failure) {
    json j{{"identity", identity}, {"n_max", n_max}, {"pass", !failure.has_value()}};
    if (failure) {
        j["first_failure"] = {{"index", failure->index}, {"lhs", failure->lhs}, {"rhs", failure->rhs}};
    } else {
        j["first_failure"] = nullptr;
    }
    return j;
}

CheckOutcome verify_recurrence(int n_max) {
    std::optional<qseries::Mismatch> failure;
    for (int n = 0; n <= n_max && !failure; ++n) {
        const MotiveClass rec = catalog::motive_quad_full_recursive(n);
        const MotiveClass closed = catalog::motive_quad_full(n);
        if (!(rec == closed)) {
            failure = qseries::Mismatch{n, rec.to_string(), closed.to_string()};
        }
    }
    return {"recurrence n<=" + std::to_string(n_max), !failure, catalog_report("recurrence", n_max, failure)};
}

CheckOutcome verify_decomposition(int n_max) {
    std::optional<qseries::Mismatch> failure;
    for (int n = 0; n <= n_max && !failure; ++n) {
        if (!catalog::check_total_decomposition(n)) {
            failure = qseries::Mismatch{n, "sum_r [Quad_{n,r}]", "L^" + std::to_string(n * (n + 1) / 2)};
        }
    }
    return {"decomposition n<=" + std::to_string(n_max), !failure, catalog_report("decomposition", n_max, failure)};
}

CheckOutcome verify_theorem(int n_max) {
    std::optional<qseries::Mismatch> failure;
    for (int n = 1; n <= n_max && !failure; ++n) {
        const MotiveClass bo = catalog::motive_bo(n);
        const MotiveClass lhs = bo * catalog::motive_gl(n);
        const MotiveClass rhs = catalog::motive_quad_full(n);
        if (!(lhs == rhs)) {
            failure = qseries::Mismatch{n, lhs.to_string(), rhs.to_string()};
        } else if (!(bo == catalog::motive_bo_quotient(n))) {
            failure = qseries::Mismatch{n, bo.to_string(), catalog::motive_bo_quotient(n).to_string()};
        } else if (n >= 3) {
            const MotiveClass prod = bo * catalog::motive_so(n);
            if (!(prod == MotiveClass(1))) {
                failure = qseries::Mismatch{n, prod.to_string(), "1"};
            }
        }
    }
    return {"theorem n<=" + std::to_string(n_max), !failure, catalog_report("theorem", n_max, failure)};
}

CheckOutcome from_identity(const qseries::IdentityReport &r) {
    std::string label = r.identity + " order_x=" + std::to_string(r.order_x);
    if (r.order_L) {
        label += " order_L=" + std::to_string(*r.order_L);
    }
    return {label, r.pass, qseries::to_json(r)};
}

std::vector<int> dimensions(const VerifyArgs &a, int first, int default_max) {
    if (a.n) {
        return {*a.n};
    }
    std::vector<int> dims;
    for (int n = first; n <= a.n_max.value_or(default_max); ++n) {
        dims.push_back(n);
    }
    return dims;
}

std::vector<CheckOutcome> run_target(const std::string &target, const VerifyArgs &a, const mpz_class &budget) {
    ff::EnumerationOptions options;
    options.budget = budget;
    std::vector<CheckOutcome> out;
    if (target == "recurrence") {
        out.push_back(verify_recurrence(a.n_max.value_or(30)));
    } else if (target == "decomposition") {
        out.push_back(verify_decomposition(a.n_max.value_or(30)));
    } else if (target == "theorem") {
        out.push_back(verify_theorem(a.n_max.value_or(30)));
    } else if (target == "gfun") {
        out.push_back(from_identity(qseries::check_recurrence_solution(a.order_x.value_or(16))));
        out.push_back(from_identity(qseries::check_p_substitution(a.order_x.value_or(16))));
    } else if (target == "closed-form") {
        out.push_back(from_identity(qseries::check_g_closed_form(a.order_x.value_or(12), a.order_l.value_or(24))));
    } else if (target == "exp-product") {
        out.push_back(from_identity(qseries::check_exp_product(a.order_x.value_or(10), a.order_l.value_or(20))));
    } else if (target == "euler") {
        out.push_back(from_identity(qseries::check_euler_identity(a.order_x.value_or(12), a.order_l.value_or(24))));
    } else if (target == "census") {
        const auto q = require_odd_prime(a.q);
        for (int n : dimensions(a, 0, 4)) {
            const auto report = ff::verify_census(q, n, options);
            out.push_back({"census q=" + std::to_string(q) + " n=" + std::to_string(n), report.pass, to_json(report)});
        }
    } else if (target == "stack-count") {
        const auto q = require_odd_prime(a.q);
        for (int n : dimensions(a, 1, 3)) {
            const auto report = ff::verify_stack_count(q, n, options);
            out.push_back(
                {"stack-count q=" + std::to_string(q) + " n=" + std::to_string(n), report.pass, to_json(report)});
        }
    } else {
        throw UsageError("unknown verify target '" + target + "'");
    }
    return out;
}

int cmd_verify(const VerifyArgs &a, const CommonOptions &common, std::ostream &out, std::ostream &err) {
    if (common.format == "csv") {
        throw UsageError("csv output is only available for table commands");
    }
    if ((a.n_max && *a.n_max < 0) || (a.n && *a.n < 0) || (a.order_x && *a.order_x < 0) ||
        (a.order_l && *a.order_l < 1)) {
        throw UsageError("orders and dimensions must be non-negative (--order-L >= 1)");
    }
    const mpz_class budget = resolve_budget(common.budget);
    static const std::vector<std::string> all_targets{"recurrence", "decomposition", "theorem",  "gfun",
                                                      "closed-form", "exp-product",  "euler",    "census",
                                                      "stack-count"};
    std::vector<std::string> targets;
    if (a.target == "all") {
        targets = all_targets;
    } else if (std::find(all_targets.begin(), all_targets.end(), a.target) != all_targets.end()) {
        targets = {a.target};
    } else {
        throw UsageError("unknown verify target '" + a.target + "'");
    }

    std::vector<CheckOutcome> outcomes;
    try {
        for (const auto &t : targets) {
            auto part = run_target(t, a, budget);
            outcomes.insert(outcomes.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
    } catch (const BudgetExceeded &e) {
        const json reason{{"error", "budget_exceeded"},
                          {"required", e.required().get_str()},
                          {"budget", e.budget().get_str()}};
        if (common.format == "json") {
            out << reason.dump(2) << '\n';
        }
        err << "error: " << e.what() << " (raise it with --budget or " << kBudgetEnv << ")\n";
        return kBudgetExceeded;
    }

    const bool pass = std::all_of(outcomes.begin(), outcomes.end(), [](const CheckOutcome &c) { return c.pass; });
    if (common.format == "json") {
        json checks = json::array();
        for (const auto &c : outcomes) {
            checks.push_back(c.report);
        }
        out << json{{"pass", pass}, {"checks", checks}}.dump(2) << '\n';
    } else {
        for (const auto &c : outcomes) {
            out << (c.pass ? "PASS " : "FAIL ") << c.label << '\n';
            if (!c.pass && c.report.contains("first_failure") && !c.report["first_failure"].is_null()) {
                out << "  first failure: " << c.report["first_failure"].dump() << '\n';
            }
        }
    }
    return pass ? kPass : kVerificationFailed;
}

// ------------------------------------------------------------------ table

struct TableArgs {
    std::string kind;
    long q = 3;
    int n_max = 3;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void render(const Table &t, const std::string &name, std::uint32_t q, const std::string &format, std::ostream &out) {
    if (format == "csv") {
        for (std::size_t i = 0; i < t.header.size(); ++i) {
            out << (i ? "," : "") << t.header[i];
        }
        out << '\n';
        for (const auto &row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << (i ? "," : "") << row[i];
            }
            out << '\n';
        }
    } else if (format == "json") {
        json rows = json::array();
        for (const auto &row : t.rows) {
            json r;
            for (std::size_t i = 0; i < row.size(); ++i) {
                r[t.header[i]] = row[i];
            }
            rows.push_back(std::move(r));
        }
        out << json{{"table", name}, {"q", q}, {"rows", rows}}.dump(2) << '\n';
    } else {
        std::vector<std::size_t> width(t.header.size());
        for (std::size_t i = 0; i < t.header.size(); ++i) {
            width[i] = t.header[i].size();
            for (const auto &row : t.rows) {
                width[i] = std::max(width[i], row[i].size());
            }
        }
        auto line = [&](const std::vector<std::string> &cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << cells[i];
            }
            out << '\n';
        };
        line(t.header);
        for (const auto &row : t.rows) {
            line(row);
        }
    }
}

int cmd_table(const TableArgs &a, const CommonOptions &common, std::ostream &out, std::ostream &err) {
    const auto q = require_odd_prime(a.q);
    if (a.n_max < 0) {
        throw UsageError("--n-max must be non-negative");
    }
    Table t;
    if (a.kind == "quad-census") {
        ff::EnumerationOptions options;
        options.budget = resolve_budget(common.budget);
        t.header = {"q", "n", "r", "count", "formula_value", "match"};
        bool pass = true;
        try {
            for (int n = 0; n <= a.n_max; ++n) {
                const auto report = ff::verify_census(q, n, options);
                pass = pass && report.pass;
                for (const auto &row : report.rows) {
                    t.rows.push_back({std::to_string(q), std::to_string(n), std::to_string(row.r), row.count.get_str(),
                                      row.formula_value.get_str(), row.match ? "true" : "false"});
                }
            }
        } catch (const BudgetExceeded &e) {
            if (common.format == "json") {
                out << json{{"error", "budget_exceeded"},
                            {"required", e.required().get_str()},
                            {"budget", e.budget().get_str()}}
                           .dump(2)
                    << '\n';
            }
            err << "error: " << e.what() << '\n';
            return kBudgetExceeded;
        }
        render(t, a.kind, q, common.format, out);
        return pass ? kPass : kVerificationFailed;
    }
    if (a.kind == "motive-values") {
        t.header = {"q", "n", "r", "formula_value"};
        for (int n = 0; n <= a.n_max; ++n) {
            for (int r = 0; r <= n; ++r) {
                t.rows.push_back({std::to_string(q), std::to_string(n), std::to_string(r),
                                  rational_string(catalog::motive_quad(n, r).evaluate(mpq_class(q)))});
            }
        }
        render(t, a.kind, q, common.format, out);
        return kPass;
    }
    throw UsageError("unknown table kind '" + a.kind + "'");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact motivic classes of quadratic-form strata and orthogonal classifying stacks", "motivic"};
    app.require_subcommand(1);

    CommonOptions common;
    auto add_common = [&](CLI::App *sub, bool tabular) {
        std::vector<std::string> formats{"text", "json"};
        if (tabular) {
            formats.push_back("csv");
        }
        sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember(formats));
        sub->add_option("--budget", common.budget, "Maximum number of enumerated objects");
    };

    MotiveArgs motive_args;
    auto *motive = app.add_subcommand("motive", "Show a catalog class");
    motive->add_option("kind", motive_args.kind,
                       "gaussian-int | gaussian-factorial | gaussian-binomial | grassmannian | gl | so | quad | "
                       "quad-full | bo | bso | affine")
        ->required();
    motive->add_option("params", motive_args.params, "Non-negative integer parameters")->required();
    motive->add_option("--expand", motive_args.expand, "Expand at L = infinity to the given depth");
    motive->add_option("--eval", motive_args.eval, "Evaluate at a rational L (use --eval=-1/2 for negatives)");
    add_common(motive, false);

    VerifyArgs verify_args;
    auto *verify = app.add_subcommand("verify", "Check identities exactly or against finite-field counts");
    verify->add_option("target", verify_args.target,
                       "recurrence | decomposition | theorem | gfun | closed-form | exp-product | euler | census | "
                       "stack-count | all")
        ->required();
    verify->add_option("--n-max", verify_args.n_max, "Largest dimension to check");
    verify->add_option("--n", verify_args.n, "Single dimension (census, stack-count)");
    verify->add_option("--order-x", verify_args.order_x, "Order in x of generating series");
    verify->add_option("--order-L", verify_args.order_l, "Truncation order in L for infinite products");
    verify->add_option("--q", verify_args.q, "Odd prime field size");
    add_common(verify, false);

    TableArgs table_args;
    auto *table = app.add_subcommand("table", "Tabulate censuses or formula values");
    table->add_option("kind", table_args.kind, "quad-census | motive-values")->required();
    table->add_option("--q", table_args.q, "Odd prime field size");
    table->add_option("--n-max", table_args.n_max, "Largest dimension");
    add_common(table, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return kPass;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (motive->parsed()) {
            return cmd_motive(motive_args, common, out, err);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_args, common, out, err);
        }
        return cmd_table(table_args, common, out, err);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const EvenDimension &e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument &e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range &e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace motive::cli

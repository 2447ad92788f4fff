#ifndef NEWTON_SUMS_TOOLS_CLI_HPP
#define NEWTON_SUMS_TOOLS_CLI_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <newton_sums/newton_sums.hpp>

namespace newton_sums::cli
{

enum ExitCode : int
{
    ok = 0,
    usage = 1,
    domain = 2,
    internal = 3,
};

/// Bad invocation that CLI11 cannot see (degree out of range etc.).
class usage_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct Check
{
    std::string name;
    bool pass = false;
    std::optional<Rational> residual;
};

namespace detail
{

inline Check residual_check(std::string name, const Rational& residual)
{
    return Check{std::move(name), residual.is_zero(), residual};
}

inline bool all_pass(const std::vector<Check>& checks)
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

inline nlohmann::json rationals_json(const std::vector<Rational>& values)
{
    auto arr = nlohmann::json::array();
    for (const auto& v : values) {
        arr.push_back(v.str());
    }
    return arr;
}

inline nlohmann::json checks_json(const std::vector<Check>& checks)
{
    auto arr = nlohmann::json::array();
    for (const auto& c : checks) {
        arr.push_back({{"name", c.name},
                       {"pass", c.pass},
                       {"residual", c.residual ? nlohmann::json(c.residual->str()) : nlohmann::json(nullptr)}});
    }
    return arr;
}

inline nlohmann::json document(std::size_t degree, const PowerSumSequence& sums, const std::vector<Check>& checks)
{
    return {{"degree", degree}, {"power_sums", rationals_json(sums.values)}, {"checks", checks_json(checks)}};
}

/// "p0 = 2" rows with the values right-aligned.
inline void print_sequence(std::ostream& out, const std::string& label, const PowerSumSequence& sums)
{
    std::size_t label_width = 0;
    std::size_t value_width = 0;
    for (std::size_t k = 0; k < sums.size(); ++k) {
        label_width = std::max(label_width, label.size() + std::to_string(k).size());
        value_width = std::max(value_width, sums[k].str().size());
    }
    for (std::size_t k = 0; k < sums.size(); ++k) {
        out << std::left << std::setw(static_cast<int>(label_width)) << (label + std::to_string(k)) << " = "
            << std::right << std::setw(static_cast<int>(value_width)) << sums[k].str() << '\n';
    }
}

inline void print_checks(std::ostream& out, const std::vector<Check>& checks)
{
    std::size_t name_width = 0;
    std::size_t residual_width = 0;
    for (const auto& c : checks) {
        name_width = std::max(name_width, c.name.size());
        residual_width = std::max(residual_width, c.residual ? c.residual->str().size() : std::size_t{1});
    }
    for (const auto& c : checks) {
        out << std::left << std::setw(static_cast<int>(name_width)) << c.name << "  " << std::right
            << std::setw(static_cast<int>(residual_width)) << (c.residual ? c.residual->str() : "-") << "  "
            << (c.pass ? "ok" : "FAIL") << '\n';
    }
    const auto failed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; });
    out << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << '\n';
}

/// Element-wise agreement between two routes, one check per index.
inline std::vector<Check> agreement_checks(const std::string& what, const PowerSumSequence& lhs,
                                           const PowerSumSequence& rhs)
{
    std::vector<Check> checks;
    for (std::size_t k = 0; k < std::min(lhs.size(), rhs.size()); ++k) {
        checks.push_back(residual_check("p" + std::to_string(k) + " " + what, lhs[k] - rhs[k]));
    }
    return checks;
}

inline std::vector<Check> cross_checks(const CrossMultipliedReport& report)
{
    std::vector<Check> checks;
    for (const auto& r : report.residuals) {
        checks.push_back(residual_check("series*Z - Z' at x^" + std::to_string(r.exponent), r.value));
    }
    return checks;
}

inline void require_nonconstant(const Polynomial& p)
{
    if (p.degree() == 0) {
        throw math_error("a constant polynomial has no roots");
    }
}

} // namespace detail

struct Options
{
    bool json = false;
    std::string polynomial;
    std::string roots;
    std::string powersums;
    std::size_t k = 0;
    std::size_t n = 0;
    std::size_t degree = 0;
    std::uint64_t seed = 0;
};

inline int cmd_powersums(const Options& o, std::ostream& out)
{
    const Polynomial p = parse_polynomial(o.polynomial);
    detail::require_nonconstant(p);
    const PowerSumSequence sums = power_sums_from_coeffs(to_signed(p), o.k);
    if (o.json) {
        out << detail::document(p.degree(), sums, {}).dump() << '\n';
    } else {
        out << "polynomial: " << to_string(monic(p)) << '\n';
        detail::print_sequence(out, "p", sums);
    }
    return ok;
}

inline int cmd_coeffs(const Options& o, std::ostream& out)
{
    const std::vector<Rational> given = parse_rational_list(o.powersums);
    const PowerSumSequence sums = PowerSumSequence::from_p1(o.n, given);
    const SignedCoefficients s = coeffs_from_power_sums(sums, o.n);
    // entries past p_n must follow from the recovered coefficients
    std::vector<Check> checks;
    if (sums.size() > o.n + 1) {
        checks = detail::agreement_checks("given - recurrence", sums, power_sums_from_coeffs(s, sums.size() - 1));
    }
    const Polynomial p = from_signed(s);
    if (o.json) {
        auto doc = detail::document(o.n, sums, checks);
        doc["polynomial"] = to_string(p);
        out << doc.dump() << '\n';
    } else {
        out << to_string(p) << '\n';
        if (!detail::all_pass(checks)) {
            detail::print_checks(out, checks);
        }
    }
    return detail::all_pass(checks) ? ok : domain;
}

inline int cmd_series(const Options& o, std::ostream& out)
{
    const Polynomial p = parse_polynomial(o.polynomial);
    const PowerSumSequence sums = log_derivative_power_sums(p, o.k);
    const std::string rendered = to_string(as_log_derivative_series(sums));
    if (o.json) {
        auto doc = detail::document(p.degree(), sums, {});
        doc["series"] = rendered;
        out << doc.dump() << '\n';
    } else {
        out << rendered << '\n';
    }
    return ok;
}

inline int cmd_from_roots(const Options& o, std::ostream& out)
{
    const RootMultiset r{parse_rational_list(o.roots)};
    const Polynomial p = poly_from_roots(r);
    const PowerSumSequence direct = power_sums_direct(r, o.k);
    const PowerSumSequence recurrence = power_sums_from_coeffs(to_signed(p), o.k);
    const PowerSumSequence series = log_derivative_power_sums(p, o.k);
    if (direct != recurrence || direct != series) {
        throw internal_error("direct, recurrence and series power sums disagree");
    }
    if (o.json) {
        auto doc = detail::document(p.degree(), direct,
                                    {Check{"direct = recurrence = series", true, std::nullopt}});
        doc["polynomial"] = to_string(p);
        out << doc.dump() << '\n';
    } else {
        out << "polynomial: " << to_string(p) << '\n';
        detail::print_sequence(out, "p", direct);
    }
    return ok;
}

inline int cmd_verify(const Options& o, const bool have_roots, std::ostream& out)
{
    const Polynomial p = parse_polynomial(o.polynomial);
    detail::require_nonconstant(p);
    const SignedCoefficients s = to_signed(p);
    const std::size_t n = s.degree();

    const PowerSumSequence recurrence = power_sums_from_coeffs(s, o.k);
    const PowerSumSequence series = log_derivative_power_sums(p, o.k);
    std::vector<Check> checks = detail::agreement_checks("recurrence - series", recurrence, series);
    const auto cross = detail::cross_checks(cross_multiplied_residual(p, series));
    checks.insert(checks.end(), cross.begin(), cross.end());

    if (have_roots) {
        const RootMultiset r{parse_rational_list(o.roots)};
        // the collected identities start at k = n; the truncation grid stops there
        const SubstitutionReport sub = verify_by_substitution(p, r, std::max(o.k, n));
        for (const auto& rr : sub.roots) {
            checks.push_back(detail::residual_check("Z(" + rr.root.str() + ")", rr.residual));
        }
        for (const auto& ir : sub.identities) {
            checks.push_back(detail::residual_check("collected identity k=" + std::to_string(ir.k), ir.residual));
        }
        const TruncationReport grid = truncation_report(s, r, std::min(o.k, n));
        for (const auto& cell : grid.cells) {
            checks.push_back(detail::residual_check("degree-" + std::to_string(cell.truncation_degree) +
                                                        " truncation p" + std::to_string(cell.power),
                                                    cell.from_truncation - cell.direct));
        }
    }

    if (o.json) {
        out << detail::document(n, recurrence, checks).dump() << '\n';
    } else {
        out << "polynomial: " << to_string(monic(p)) << '\n';
        detail::print_checks(out, checks);
    }
    return detail::all_pass(checks) ? ok : domain;
}

inline int cmd_truncate(const Options& o, std::ostream& out)
{
    const Polynomial p = parse_polynomial(o.polynomial);
    const SignedCoefficients s = to_signed(p);
    if (o.degree > s.degree()) {
        throw usage_error("--degree " + std::to_string(o.degree) + " exceeds the polynomial degree " +
                          std::to_string(s.degree()));
    }
    const SignedCoefficients t = truncate(s, o.degree);
    const Polynomial q = from_signed(t);
    if (o.json) {
        auto doc = detail::document(t.degree(), power_sums_from_coeffs(t, t.degree()), {});
        doc["polynomial"] = to_string(q);
        out << doc.dump() << '\n';
    } else {
        out << to_string(q) << '\n';
    }
    return ok;
}

inline int cmd_negpowers(const Options& o, std::ostream& out)
{
    const Polynomial p = parse_polynomial(o.polynomial);
    detail::require_nonconstant(p);
    const PowerSumSequence q = negative_power_sums(to_signed(p), o.k);
    if (o.json) {
        out << detail::document(p.degree(), q, {}).dump() << '\n';
    } else {
        out << "polynomial: " << to_string(monic(p)) << '\n';
        detail::print_sequence(out, "q", q);
    }
    return ok;
}

inline int cmd_bench(const Options& o, std::ostream& out)
{
    if (o.degree < 1 || o.k < 1) {
        throw usage_error("bench needs --degree >= 1 and --k >= 1");
    }
    const BenchResult r = run_bench(o.degree, o.k, o.seed);
    if (!r.agree) {
        throw internal_error("recurrence and series routes disagree");
    }
    if (o.json) {
        auto doc = detail::document(o.degree, r.sums, {Check{"recurrence = series", r.agree, std::nullopt}});
        doc["polynomial"] = to_string(r.polynomial);
        doc["max_numerator_bits"] = r.max_numerator_bits;
        doc["seconds"] = {{"recurrence", r.recurrence_seconds}, {"series", r.series_seconds}};
        out << doc.dump() << '\n';
    } else {
        std::ostringstream timing;
        timing << std::fixed << std::setprecision(6);
        out << "degree " << o.degree << ", k " << o.k << ", seed " << o.seed << '\n';
        out << "polynomial: " << to_string(r.polynomial) << '\n';
        timing << "recurrence: " << r.recurrence_seconds << " s\n"
               << "series:     " << r.series_seconds << " s\n";
        out << timing.str();
        out << "agreement: exact (p0..p" << o.k << ")\n";
        out << "max numerator bits: " << r.max_numerator_bits << '\n';
    }
    return ok;
}

/// Runs one command line (args excludes the program name). Returns the exit
/// code; diagnostics go to err.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Power sums of polynomial roots, computed exactly from the coefficients and back.", "newton-sums"};
    app.require_subcommand(1);
    app.footer(std::string("Polynomial grammar:\n") + std::string(polynomial_grammar) +
               "A polynomial that starts with '-' must follow '--' after all options,\n"
               "e.g. newton-sums powersums --k 3 -- \"-x^2 + 1\".\n"
               "Exit codes: 0 ok, 1 usage or parse error, 2 math error or failed check,\n"
               "3 internal disagreement between routes.");

    Options o;
    bool have_roots = false;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Emit JSON on standard output"); };
    auto add_poly = [&](CLI::App* sub) {
        sub->add_option("polynomial", o.polynomial, "Polynomial expression, e.g. \"x^2 - 3x + 2\"")->required();
    };
    auto add_k = [&](CLI::App* sub, const std::string& what) { sub->add_option("--k", o.k, what)->required(); };

    auto* powersums = app.add_subcommand("powersums", "Power sums p0..pk via Newton's recurrence");
    add_poly(powersums);
    add_k(powersums, "Largest power");
    add_json(powersums);

    auto* coeffs = app.add_subcommand("coeffs", "Monic polynomial from power sums p1..pn (p0 = n is implied)");
    coeffs->add_option("--n", o.n, "Degree")->required();
    coeffs->add_option("--powersums", o.powersums, "Comma-separated p1,p2,...,pn (extra entries are checked)")
        ->required();
    add_json(coeffs);

    auto* series = app.add_subcommand("series", "Expansion of Z'/Z in descending powers of x, k+1 terms");
    add_poly(series);
    add_k(series, "Largest power sum shown (the series has k+1 terms)");
    add_json(series);

    auto* from_roots = app.add_subcommand("from-roots", "Polynomial and power sums from explicit rational roots");
    from_roots->add_option("roots", o.roots, "Comma-separated roots, e.g. 1,2,1/3")->required();
    add_k(from_roots, "Largest power");
    add_json(from_roots);

    auto* verify = app.add_subcommand("verify", "Check recurrence, series and (with --roots) substitution identities");
    add_poly(verify);
    verify->add_option("--roots", o.roots, "Claimed complete root multiset")->each([&](const std::string&) {
        have_roots = true;
    });
    add_k(verify, "Largest power");
    add_json(verify);

    auto* trunc = app.add_subcommand("truncate", "Lower-degree companion equation from the leading signed coefficients");
    add_poly(trunc);
    trunc->add_option("--degree", o.degree, "Degree of the companion equation")->required();
    add_json(trunc);

    auto* negpowers = app.add_subcommand("negpowers", "Sums of negative powers q0..qk of the roots");
    add_poly(negpowers);
    add_k(negpowers, "Largest negative power");
    add_json(negpowers);

    auto* bench = app.add_subcommand("bench", "Time recurrence vs series on a seeded random monic polynomial");
    bench->add_option("--degree", o.degree, "Degree (>= 1)")->required();
    add_k(bench, "Largest power (>= 1)");
    bench->add_option("--seed", o.seed, "Random seed");
    add_json(bench);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (powersums->parsed()) {
            return cmd_powersums(o, out);
        }
        if (coeffs->parsed()) {
            return cmd_coeffs(o, out);
        }
        if (series->parsed()) {
            return cmd_series(o, out);
        }
        if (from_roots->parsed()) {
            return cmd_from_roots(o, out);
        }
        if (verify->parsed()) {
            return cmd_verify(o, have_roots, out);
        }
        if (trunc->parsed()) {
            return cmd_truncate(o, out);
        }
        if (negpowers->parsed()) {
            return cmd_negpowers(o, out);
        }
        if (bench->parsed()) {
            return cmd_bench(o, out);
        }
    } catch (const parse_error& e) {
        err << "parse error at " << e.diagnostic().str() << '\n';
        return usage;
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const math_error& e) {
        err << "math error: " << e.what() << '\n';
        return domain;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << '\n';
        return internal;
    }
    return usage;
}

} // namespace newton_sums::cli

#endif // NEWTON_SUMS_TOOLS_CLI_HPP

#ifndef MOTIVIC_CLI_HPP
#define MOTIVIC_CLI_HPP

#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <motivic/curve.hpp>
#include <motivic/curve_io.hpp>
#include <motivic/errors.hpp>
#include <motivic/moduli.hpp>
#include <motivic/oracles/centralizer.hpp>
#include <motivic/oracles/splitting.hpp>
#include <motivic/oracles/torsion.hpp>
#include <motivic/parser.hpp>
#include <motivic/realization.hpp>
#include <motivic/report.hpp>
#include <motivic/verify.hpp>

namespace motivic::cli
{

enum exit_code : int { ok = 0, verification_failed = 1, usage_error = 2, precision_error = 3 };

using report::json;

struct SharedOptions {
    std::string curve = "p1";
    std::optional<long> q;
    bool symbolic = false;
    std::optional<int> prec;
    int ext = 1;
    std::string format = "human";
    std::string out;
};

struct CommandResult {
    json curve;        // null when no curve is involved
    json mode;         // "numeric" / "symbolic" / null
    json precision;    // precision and tail metadata
    json result;       // payload
    std::string human; // human-readable rendering of the same payload
    json notes = json::array();
    int exit = ok;
};

namespace detail
{

inline std::string approx(const Rational &r)
{
    std::ostringstream os;
    os << std::setprecision(12) << r.convert_to<double>();
    return os.str();
}

inline std::string human_rational(const Rational &r)
{
    return is_integer(r) ? to_string(r) : to_string(r) + "  (~" + approx(r) + ")";
}

inline std::string mode_name(const SharedOptions &o)
{
    return o.symbolic ? "symbolic" : "numeric";
}

inline void require_mode(const SharedOptions &o, const CurveSpec &spec)
{
    if (!o.symbolic && !o.q) {
        if (spec.fixed_q) {
            return;
        }
        throw precondition_violation("one of --q <int> or --symbolic is required");
    }
}

inline long numeric_q(const SharedOptions &o, const CurveSpec &spec)
{
    return o.q ? *o.q : *spec.fixed_q;
}

inline std::optional<long> q_or_null(const SharedOptions &o, const CurveSpec &spec)
{
    if (o.symbolic) {
        return std::nullopt;
    }
    return numeric_q(o, spec);
}

inline StackId parse_stack(const std::string &s)
{
    auto fail = [&]() -> StackId {
        throw precondition_violation("bad --stack '" + s + "': expected coh0:<d>, bun:<n>,<d> or coh:<n>,<d>");
    };
    const auto colon = s.find(':');
    if (colon == std::string::npos) {
        return fail();
    }
    const std::string kind = s.substr(0, colon);
    const std::string rest = s.substr(colon + 1);
    if (kind == "coh0") {
        const auto d = motivic::detail::parse_long(rest);
        return d ? StackId::coh0(*d) : fail();
    }
    const auto comma = rest.find(',');
    if (comma == std::string::npos) {
        return fail();
    }
    const auto n = motivic::detail::parse_long(rest.substr(0, comma));
    const auto d = motivic::detail::parse_long(rest.substr(comma + 1));
    if (!n || !d || *n > 64) {
        return fail();
    }
    if (kind == "bun") {
        return StackId::bun(static_cast<int>(*n), *d);
    }
    if (kind == "coh") {
        return StackId::coh(static_cast<int>(*n), *d);
    }
    return fail();
}

inline std::string series_line(const std::string &name, const std::string &body)
{
    return name + " = " + body + "\n";
}

} // namespace detail

// curve info: validation, point counts, closed points, Jacobian counts, zeta series.
inline CommandResult cmd_curve_info(const SharedOptions &o)
{
    const CurveSpec spec = resolve_curve(o.curve);
    detail::require_mode(o, spec);
    const int horizon = o.prec.value_or(6);
    if (horizon < 1 || horizon > 64) {
        throw precondition_violation("--prec (census horizon) must be in [1, 64]");
    }
    CommandResult r;
    const auto q = detail::q_or_null(o, spec);
    r.curve = report::curve_json(spec, q);
    r.mode = detail::mode_name(o);
    r.precision = {{"horizon", horizon}};
    std::ostringstream h;
    h << "curve " << spec.label << " (" << spec.descriptor << "), genus " << spec.genus << ", "
      << (q ? "q = " + std::to_string(*q) : std::string("formal q")) << "\n";
    json res;
    res["validation"] = "ok";
    json counts = json::array();
    json jac = json::array();
    if (q) {
        const NumericCurve c = spec.numeric(*q);
        const auto cen = census(c, horizon);
        json closed = json::array();
        h << "m   N_m   B_m   #Jac(F_q^m)\n";
        for (int m = 1; m <= horizon; ++m) {
            counts.push_back({{"m", m}, {"value", to_string(cen.counts.at(m))}});
            closed.push_back({{"e", m}, {"value", to_string(cen.closed_points.at(m))}});
            const Rational jm = jac_count(c, m);
            jac.push_back({{"m", m}, {"value", report::to_json(jm)}});
            h << m << "   " << to_string(cen.counts.at(m)) << "   " << to_string(cen.closed_points.at(m)) << "   "
              << to_string(jm) << "\n";
        }
        res["point_counts"] = counts;
        res["closed_points"] = closed;
        res["jacobian_counts"] = jac;
        const auto z = zeta_series(c, horizon + 1);
        res["zeta_series"] = report::to_json(z);
        h << detail::series_line("Z(t)", z.str());
        r.notes.push_back(verify::detail::hypothesis_note(c));
    } else {
        const SymbolicCurve c = spec.symbolic();
        for (int m = 1; m <= horizon; ++m) {
            const LaurentQ n = point_count(c, m);
            const LaurentQ jm = jac_count(c, m);
            counts.push_back({{"m", m}, {"value", report::to_json(n)}});
            jac.push_back({{"m", m}, {"value", report::to_json(jm)}});
            h << "N_" << m << " = " << n.str() << "    #Jac_" << m << " = " << jm.str() << "\n";
        }
        res["point_counts"] = counts;
        res["jacobian_counts"] = jac;
        const auto z = zeta_series(c, horizon + 1);
        res["zeta_series"] = report::to_json(z);
        h << detail::series_line("Z(t)", z.str());
        r.notes.push_back(verify::detail::symbolic_hypothesis_note());
    }
    r.result = res;
    r.human = h.str();
    return r;
}

// realize: counting (numeric exact or symbolic u-series) or Betti realization of an expression.
inline CommandResult cmd_realize(const SharedOptions &o, const std::string &expr_src, const std::string &realization)
{
    const MotiveExpr e = parse_expr(expr_src);
    CommandResult r;
    json res;
    res["expr"] = to_string(e);
    res["realization"] = realization;
    std::ostringstream h;
    h << "expr: " << to_string(e) << "\n";
    const CurveSpec spec = resolve_curve(o.curve);
    if (realization == "betti") {
        const int prec = o.prec.value_or(10);
        if (prec < 1) {
            throw precondition_violation("--prec must be >= 1");
        }
        r.curve = report::curve_json(spec, spec.fixed_q);
        r.precision = {{"prec", prec}};
        const auto s = betti(e, spec.genus, prec);
        res["value"] = report::to_json(s);
        h << detail::series_line("betti", s.str());
    } else if (realization == "count") {
        detail::require_mode(o, spec);
        if (o.ext < 1) {
            throw precondition_violation("--ext must be >= 1");
        }
        const auto q = detail::q_or_null(o, spec);
        r.curve = report::curve_json(spec, q);
        r.mode = detail::mode_name(o);
        res["ext"] = o.ext;
        if (q) {
            const ScalarCountBackend backend(spec.numeric(*q));
            const Rational v = ev(e, backend, o.ext);
            r.precision = {{"tail_bound", "0"}};
            res["value"] = report::to_json(v);
            h << "ev_" << o.ext << " = " << detail::human_rational(v) << "\n";
        } else {
            const int prec = o.prec.value_or(8);
            const GradedCountBackend<LaurentQ> backend(spec.symbolic(), prec);
            const auto s = ev(e, backend, o.ext);
            r.precision = {{"prec", prec}};
            res["value"] = report::to_json(s);
            h << detail::series_line("ev_" + std::to_string(o.ext), s.str());
        }
    } else {
        throw precondition_violation("--realization must be count or betti");
    }
    r.result = res;
    r.human = h.str();
    return r;
}

// count: groupoid count of Coh0 / Bun / Coh.
inline CommandResult cmd_count(const SharedOptions &o, const std::string &stack_src, const std::string &method)
{
    const StackId s = detail::parse_stack(stack_src);
    const CurveSpec spec = resolve_curve(o.curve);
    detail::require_mode(o, spec);
    if (o.ext < 1) {
        throw precondition_violation("--ext must be >= 1");
    }
    if (method != "product" && method != "stratified") {
        throw precondition_violation("--method must be product or stratified");
    }
    if (method == "stratified" && s.kind != StackId::Kind::coh) {
        throw precondition_violation("--method stratified applies to coh:<n>,<d> only");
    }
    const auto q = detail::q_or_null(o, spec);
    CommandResult r;
    r.curve = report::curve_json(spec, q);
    r.mode = detail::mode_name(o);
    json res;
    res["stack"] = s.str();
    res["ext"] = o.ext;
    res["dimension"] = stack_dim(s, spec.genus);
    std::ostringstream h;
    h << "#" << s.str() << "(F_q^" << o.ext << ") on " << spec.label << "\n";
    if (q) {
        const ScalarCountBackend backend(spec.numeric(*q));
        const int prec = o.prec.value_or(10);
        if (prec < 0) {
            throw precondition_violation("--prec must be >= 0");
        }
        const Rational target = power(Rational(*q), -static_cast<long>(prec));
        NumericCount c;
        if (method == "stratified") {
            c = stratified_coh_count(s.rank, s.degree, backend, std::nullopt, target, o.ext);
            res["method"] = "stratified";
            res["strata"] = c.terms_used;
        } else {
            c = count(s, backend, target, o.ext);
            res["method"] = "product";
            if (s.kind == StackId::Kind::coh) {
                res["zeta_factors"] = c.terms_used;
            }
        }
        res["motive"] = to_string(motive_of(s, {s.kind == StackId::Kind::coh && method == "product" ? c.terms_used : 0}));
        res["value"] = report::to_json(c.value);
        res["tail_bound"] = report::to_json(c.tail_bound);
        r.precision = {{"prec", prec}, {"target", report::to_json(target)}, {"tail_bound", report::to_json(c.tail_bound)}};
        h << "value = " << detail::human_rational(c.value) << "\n";
        if (c.tail_bound != 0) {
            h << "|exact - value| <= " << to_string(c.tail_bound) << "  (~" << detail::approx(c.tail_bound) << ")\n";
        }
        r.notes.push_back(verify::detail::hypothesis_note(backend.curve()));
    } else {
        const int prec = o.prec.value_or(8);
        const GradedCountBackend<LaurentQ> backend(spec.symbolic(), prec);
        const auto v = method == "stratified" ? stratified_coh_count(s.rank, s.degree, backend, o.ext)
                                              : count(s, backend, o.ext);
        res["method"] = method;
        res["motive"] = to_string(motive_of(s, ZetaCutoff::symbolic(prec)));
        res["value"] = report::to_json(v);
        r.precision = {{"prec", prec}};
        h << detail::series_line("value", v.str());
        r.notes.push_back(verify::detail::symbolic_hypothesis_note());
    }
    r.result = res;
    r.human = h.str();
    return r;
}

struct VerifyOverrides {
    std::string suite;
    bool curve_given = false;
    bool prec_given = false;
    std::optional<int> spread;
    std::optional<int> d;
    std::vector<int> ranks;
};

inline verify::SuiteParams apply_overrides(const std::string &suite, const SharedOptions &o, const VerifyOverrides &v)
{
    verify::SuiteParams p = verify::default_params(suite);
    const bool graded = suite == "S4" || suite == "S5";
    if (v.curve_given) {
        p.curves = {o.curve};
    }
    if (o.q) {
        p.qs = {*o.q};
        if (graded) {
            p.symbolic = false;
        }
    }
    if (o.symbolic) {
        if (!graded) {
            throw precondition_violation("suite " + suite + " runs in numeric mode only");
        }
        p.symbolic = true;
    }
    if (o.prec) {
        if (*o.prec < 1 || *o.prec > 64) {
            throw precondition_violation("--prec must be in [1, 64]");
        }
        p.prec = *o.prec;
    }
    if (v.spread) {
        if (*v.spread < 0 || *v.spread > 40) {
            throw precondition_violation("--spread must be in [0, 40]");
        }
        p.spread = *v.spread;
    }
    if (v.d) {
        if (*v.d < 0 || *v.d > 12) {
            throw precondition_violation("--d must be in [0, 12]");
        }
        p.dmax = *v.d;
    }
    if (!v.ranks.empty()) {
        for (int n : v.ranks) {
            if (n < 1 || n > 6) {
                throw precondition_violation("--rank values must be in [1, 6]");
            }
        }
        p.ranks = v.ranks;
    }
    return p;
}

inline CommandResult cmd_verify(const SharedOptions &o, const VerifyOverrides &v)
{
    std::vector<verify::VerificationReport> reports;
    json params;
    if (v.suite == "all") {
        if (v.curve_given || o.q || o.symbolic || o.prec || v.spread || v.d || !v.ranks.empty()) {
            throw precondition_violation("verify --suite all runs the documented defaults; "
                                         "parameter overrides need a single suite");
        }
        reports = verify::run_all();
        params = "defaults";
    } else {
        const auto p = apply_overrides(v.suite, o, v);
        reports = verify::run_suite(v.suite, p);
        params = {{"curves", p.curves}, {"qs", p.qs},     {"ranks", p.ranks}, {"prec", p.prec},
                  {"spread", p.spread}, {"dmax", p.dmax}, {"symbolic", p.symbolic}};
    }
    CommandResult r;
    json list = json::array();
    std::size_t passed = 0;
    std::ostringstream h;
    for (const auto &rep : reports) {
        list.push_back(report::to_json(rep));
        passed += rep.pass ? 1 : 0;
        h << (rep.pass ? "PASS " : "FAIL ") << rep.suite << " " << rep.identity << " [" << rep.item << "]";
        if (!rep.pass) {
            h << "  (" << verify::to_string(rep.comparison) << ")";
        }
        h << "\n";
    }
    h << passed << "/" << reports.size() << " passed\n";
    r.precision = {{"suite", v.suite}, {"parameters", params}};
    r.result = {{"reports", list},
                {"summary", {{"total", reports.size()}, {"passed", passed}, {"failed", reports.size() - passed}}}};
    r.human = h.str();
    r.exit = passed == reports.size() ? ok : verification_failed;
    return r;
}

inline CommandResult cmd_oracle(const SharedOptions &o, const std::string &which, std::optional<int> d,
                                std::optional<int> rank, std::optional<int> spread)
{
    CommandResult r;
    std::ostringstream h;
    json res;
    res["oracle"] = which;
    if (o.symbolic) {
        throw precondition_violation("oracles run in numeric mode only");
    }
    if (!o.q) {
        throw precondition_violation("oracles need --q <int>");
    }
    const long q = *o.q;
    r.mode = "numeric";
    if (which == "torsion") {
        const CurveSpec spec = resolve_curve(o.curve);
        const int deg = d.value_or(2);
        if (deg < 0 || deg > 12) {
            throw precondition_violation("--d must be in [0, 12]");
        }
        const NumericCurve c = spec.numeric(q);
        r.curve = report::curve_json(spec, q);
        const Rational v = oracles::torsion_count_bruteforce(c, deg);
        res["d"] = deg;
        res["value"] = report::to_json(v);
        h << "#Coh0(" << deg << ") by points and partitions = " << detail::human_rational(v) << "\n";
        r.notes.push_back(verify::detail::hypothesis_note(c));
    } else if (which == "splitting") {
        const CurveSpec spec = resolve_curve(o.curve);
        if (spec.descriptor != "p1") {
            throw precondition_violation("the splitting oracle supports --curve p1 only");
        }
        r.curve = report::curve_json(spec, q);
        const int n = rank.value_or(2);
        const int s = spread.value_or(12);
        const int deg = d.value_or(0);
        if (n < 1 || n > 4 || s < 0 || s > 40) {
            throw precondition_violation("splitting oracle needs --rank in [1, 4] and --spread in [0, 40]");
        }
        const auto bf = oracles::bun_p1_bruteforce(n, deg, q, s);
        res["rank"] = n;
        res["d"] = deg;
        res["spread_max"] = s;
        res["types_counted"] = bf.types_counted;
        res["partial_sum"] = report::to_json(bf.partial_sum);
        res["tail_bound"] = report::to_json(bf.tail_bound);
        res["bracket"] = report::to_json(verify::interval(bf.partial_sum, bf.tail_bound));
        r.precision = {{"spread_max", s}, {"tail_bound", report::to_json(bf.tail_bound)}};
        h << bf.types_counted << " splitting types with spread <= " << s << "\n"
          << "partial = " << detail::human_rational(bf.partial_sum) << "\n"
          << "tail   <= " << to_string(bf.tail_bound) << "  (~" << detail::approx(bf.tail_bound) << ")\n";
    } else if (which == "centralizer") {
        const int deg = d.value_or(2);
        const auto c = oracles::centralizer_bruteforce(deg, q);
        res["d"] = deg;
        res["nilpotent_count"] = c.nilpotent_count;
        res["gl_order"] = to_string(c.gl_order);
        json types = json::array();
        h << "d = " << deg << ", q = " << q << ": " << c.nilpotent_count << " nilpotent matrices, |GL| = "
          << to_string(c.gl_order) << "\n";
        for (const auto &e : c.entries) {
            types.push_back({{"type", e.jordan_type.str()},
                             {"class_size", e.class_size},
                             {"centralizer_order", e.centralizer_order},
                             {"hall_order", to_string(e.hall_order)}});
            h << "  type " << e.jordan_type.str() << ": " << e.class_size << " matrices, centralizer "
              << e.centralizer_order << ", Hall " << to_string(e.hall_order) << "\n";
        }
        res["types"] = types;
    } else {
        throw precondition_violation("--which must be torsion, splitting or centralizer");
    }
    r.result = res;
    r.human = h.str();
    return r;
}

namespace detail
{

inline void add_shared(CLI::App *sub, SharedOptions &o, bool with_curve = true)
{
    if (with_curve) {
        sub->add_option("--curve", o.curve, "curve preset (p1, elliptic:<a>) or data file");
    }
    auto *qopt = sub->add_option("--q", o.q, "residue field cardinality (numeric mode)");
    auto *sym = sub->add_flag("--symbolic", o.symbolic, "formal q (symbolic mode)");
    qopt->excludes(sym);
    sym->excludes(qopt);
    sub->add_option("--prec", o.prec, "u-adic order (symbolic) or tail target q^-prec (numeric)");
    sub->add_option("--ext", o.ext, "extension degree n: count over F_{q^n}");
    sub->add_option("--format", o.format, "human, json or csv")->check(CLI::IsMember({"human", "json", "csv"}));
    sub->add_option("--out", o.out, "write the report to this path");
}

inline std::string error_kind(const std::exception &e)
{
    if (dynamic_cast<const parse_error *>(&e)) {
        return "parse_error";
    }
    if (dynamic_cast<const divergent_zeta *>(&e)) {
        return "divergent_zeta";
    }
    if (dynamic_cast<const curve_file_error *>(&e)) {
        return "curve_file_error";
    }
    if (dynamic_cast<const curve_validation_error *>(&e)) {
        return "curve_validation_error";
    }
    if (dynamic_cast<const precision_unachievable *>(&e)) {
        return "precision_unachievable";
    }
    if (dynamic_cast<const mode_mismatch *>(&e)) {
        return "mode_mismatch";
    }
    if (dynamic_cast<const precondition_violation *>(&e)) {
        return "precondition_violation";
    }
    return "internal_error";
}

inline std::string one_line(std::string s)
{
    for (char &c : s) {
        if (c == '\n' || c == '\r') {
            c = ' ';
        }
    }
    return s;
}

} // namespace detail

// Entry point: args[0] is the program name. Reports go to `out` (or --out), diagnostics
// to `err` as one line `error <kind>: <message>`.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"exact motivic counts for moduli of sheaves on curves over finite fields", "motivic"};
    app.require_subcommand(1);
    SharedOptions o;

    auto *curve_cmd = app.add_subcommand("curve", "curve data");
    curve_cmd->require_subcommand(1);
    auto *info = curve_cmd->add_subcommand("info", "validate a curve and print its census");
    detail::add_shared(info, o);

    std::string expr;
    std::string realization = "count";
    auto *realize = app.add_subcommand("realize", "realize a motive expression");
    realize->add_option("--expr", expr, "motive expression")->required();
    realize->add_option("--realization", realization, "count or betti")->check(CLI::IsMember({"count", "betti"}));
    detail::add_shared(realize, o);

    std::string stack;
    std::string method = "product";
    auto *count_cmd = app.add_subcommand("count", "groupoid count of a moduli stack");
    count_cmd->add_option("--stack", stack, "coh0:<d>, bun:<n>,<d> or coh:<n>,<d>")->required();
    count_cmd->add_option("--method", method, "product or stratified (Coh only)")
        ->check(CLI::IsMember({"product", "stratified"}));
    detail::add_shared(count_cmd, o);

    VerifyOverrides vo;
    std::optional<int> spread;
    std::optional<int> dopt;
    auto *verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", vo.suite, "S1..S6 or all")
        ->required()
        ->check(CLI::IsMember({"S1", "S2", "S3", "S4", "S5", "S6", "all"}));
    verify_cmd->add_option("--spread", spread, "splitting-type spread bound (S2, S6)");
    verify_cmd->add_option("--d", dopt, "maximal degree (S1, S3)");
    verify_cmd->add_option("--rank", vo.ranks, "comma-separated ranks")->delimiter(',');
    detail::add_shared(verify_cmd, o);

    std::string which;
    std::optional<int> rank;
    auto *oracle_cmd = app.add_subcommand("oracle", "run a brute-force oracle");
    oracle_cmd->add_option("--which", which, "torsion, splitting or centralizer")
        ->required()
        ->check(CLI::IsMember({"torsion", "splitting", "centralizer"}));
    oracle_cmd->add_option("--d", dopt, "degree (torsion, splitting) or matrix size (centralizer)");
    oracle_cmd->add_option("--rank", rank, "bundle rank (splitting)");
    oracle_cmd->add_option("--spread", spread, "spread bound (splitting)");
    detail::add_shared(oracle_cmd, o);

    json command = json::array();
    for (std::size_t i = 1; i < args.size(); ++i) {
        command.push_back(args[i]);
    }

    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success &e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError &e) {
        err << "error usage: " << detail::one_line(e.what()) << "\n";
        return usage_error;
    }

    const auto t0 = std::chrono::steady_clock::now();
    CommandResult r;
    std::string subcommand;
    auto emit_error = [&](int code, const std::string &kind, const std::string &msg) {
        err << "error " << kind << ": " << detail::one_line(msg) << "\n";
        if (o.format == "json" || o.format == "csv") {
            json doc = {{"schema_version", report::schema_version},
                        {"command", command},
                        {"status", {{"exit_code", code}, {"reason", {{"kind", kind}, {"message", detail::one_line(msg)}}}}}};
            const std::string text = o.format == "json" ? doc.dump(2) + "\n" : report::to_csv(doc);
            if (o.out.empty()) {
                out << text;
            } else {
                std::ofstream f(o.out, std::ios::binary);
                f << text;
            }
        }
        return code;
    };
    try {
        if (info->parsed()) {
            subcommand = "curve info";
            r = cmd_curve_info(o);
        } else if (realize->parsed()) {
            subcommand = "realize";
            r = cmd_realize(o, expr, realization);
        } else if (count_cmd->parsed()) {
            subcommand = "count";
            r = cmd_count(o, stack, method);
        } else if (verify_cmd->parsed()) {
            subcommand = "verify";
            vo.curve_given = verify_cmd->count("--curve") > 0;
            vo.spread = spread;
            vo.d = dopt;
            r = cmd_verify(o, vo);
        } else if (oracle_cmd->parsed()) {
            subcommand = "oracle";
            r = cmd_oracle(o, which, dopt, rank, spread);
        }
    } catch (const precision_unachievable &e) {
        return emit_error(precision_error, detail::error_kind(e), e.what());
    } catch (const std::exception &e) {
        return emit_error(usage_error, detail::error_kind(e), e.what());
    }
    const double elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    std::string text;
    if (o.format == "human") {
        text = r.human;
        for (const auto &n : r.notes) {
            text += "note: " + n.get<std::string>() + "\n";
        }
    } else {
        json doc = {{"schema_version", report::schema_version},
                    {"command", command},
                    {"subcommand", subcommand},
                    {"curve", r.curve},
                    {"mode", r.mode},
                    {"precision", r.precision},
                    {"result", r.result},
                    {"notes", r.notes},
                    {"status", {{"exit_code", r.exit}, {"reason", nullptr}}},
                    {"runtime", {{"elapsed_ms", elapsed}}}};
        text = o.format == "json" ? doc.dump(2) + "\n" : report::to_csv(doc);
    }
    if (o.out.empty()) {
        out << text;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) {
            err << "error io: cannot open --out path '" << o.out << "'\n";
            return usage_error;
        }
        f << text;
    }
    if (r.exit == verification_failed) {
        err << "error verification_failed: at least one report has verdict fail\n";
    }
    return r.exit;
}

} // namespace motivic::cli

#endif

#ifndef MOTIVIC_VERIFY_HPP
#define MOTIVIC_VERIFY_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include <motivic/curve.hpp>
#include <motivic/curve_io.hpp>
#include <motivic/errors.hpp>
#include <motivic/exact_scalar.hpp>
#include <motivic/moduli.hpp>
#include <motivic/oracles/centralizer.hpp>
#include <motivic/oracles/splitting.hpp>
#include <motivic/oracles/torsion.hpp>
#include <motivic/realization.hpp>

namespace motivic::verify
{

// exact: left == right. valuation: series agree below exponent `valuation`.
// within: right lies in the left interval and the interval width is <= epsilon (if set).
// overlap: the left and right intervals intersect.
enum class Comparison { exact, valuation, within, overlap };

inline const char *to_string(Comparison c)
{
    switch (c) {
    case Comparison::exact:
        return "exact";
    case Comparison::valuation:
        return "valuation";
    case Comparison::within:
        return "within";
    case Comparison::overlap:
        return "overlap";
    }
    return "?";
}

struct SeriesPayload {
    char variable = 'u';
    int lowest = 0;
    int prec = 0;
    CoefficientMode mode = CoefficientMode::numeric;
    std::vector<ExactScalar> coefficients; // exponents lowest .. prec - 1

    friend bool operator==(const SeriesPayload &, const SeriesPayload &) = default;
};

struct IntervalPayload {
    Rational lower;
    Rational upper;

    friend bool operator==(const IntervalPayload &, const IntervalPayload &) = default;
};

using Payload = std::variant<ExactScalar, SeriesPayload, IntervalPayload>;

template <coefficient_ring R>
SeriesPayload to_payload(const TruncSeries<R> &s)
{
    SeriesPayload p;
    p.variable = s.variable();
    p.lowest = s.lowest();
    p.prec = s.prec();
    p.mode = std::is_same_v<R, Rational> ? CoefficientMode::numeric : CoefficientMode::symbolic;
    for (const auto &c : s.coefficients()) {
        p.coefficients.emplace_back(c);
    }
    return p;
}

inline IntervalPayload interval(const Rational &partial, const Rational &tail)
{
    return {partial, partial + tail};
}

struct VerificationReport {
    std::string suite;
    std::string identity;
    std::string item;
    Payload left;
    Payload right;
    Comparison comparison = Comparison::exact;
    int valuation = 0;
    std::optional<Rational> epsilon;
    bool pass = false;
    std::vector<std::string> notes;
    double elapsed_ms = 0; // runtime metadata, excluded from determinism checks
};

namespace detail
{

inline std::optional<ExactScalar> series_coeff(const SeriesPayload &s, int e)
{
    if (e >= s.prec) {
        return std::nullopt;
    }
    if (e < s.lowest) {
        return s.mode == CoefficientMode::numeric ? ExactScalar(Rational(0)) : ExactScalar(LaurentQ());
    }
    return s.coefficients[static_cast<std::size_t>(e - s.lowest)];
}

inline bool agree_below(const SeriesPayload &a, const SeriesPayload &b, int v)
{
    if (a.variable != b.variable || a.mode != b.mode || a.prec < v || b.prec < v) {
        return false;
    }
    for (int e = std::min(a.lowest, b.lowest); e < v; ++e) {
        if (!(*series_coeff(a, e) == *series_coeff(b, e))) {
            return false;
        }
    }
    return true;
}

inline std::optional<Rational> as_point(const Payload &p)
{
    if (const auto *s = std::get_if<ExactScalar>(&p); s && s->mode() == CoefficientMode::numeric) {
        return s->as_rational();
    }
    return std::nullopt;
}

} // namespace detail

// The verdict is a function of the payloads and the comparison only.
inline bool decide(const VerificationReport &r)
{
    switch (r.comparison) {
    case Comparison::exact:
        return r.left == r.right;
    case Comparison::valuation: {
        const auto *a = std::get_if<SeriesPayload>(&r.left);
        const auto *b = std::get_if<SeriesPayload>(&r.right);
        return a && b && detail::agree_below(*a, *b, r.valuation);
    }
    case Comparison::within: {
        const auto *box = std::get_if<IntervalPayload>(&r.left);
        const auto point = detail::as_point(r.right);
        if (!box || !point) {
            return false;
        }
        const bool inside = box->lower <= *point && *point <= box->upper;
        return inside && (!r.epsilon || box->upper - box->lower <= *r.epsilon);
    }
    case Comparison::overlap: {
        const auto *a = std::get_if<IntervalPayload>(&r.left);
        const auto *b = std::get_if<IntervalPayload>(&r.right);
        return a && b && a->lower <= b->upper && b->lower <= a->upper;
    }
    }
    return false;
}

// Parameters; each suite starts from default_params(suite) and the CLI may override.
struct SuiteParams {
    std::vector<std::string> curves;
    std::vector<long> qs;
    std::vector<int> ranks;
    std::vector<long> specialize_qs; // symbolic suites: q values for the mode-consistency check
    int prec = 0;
    int spread = 0;
    int dmax = 0;
    bool symbolic = false;
    Rational width_target{1, 1000000};
};

inline const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names{"S1", "S2", "S3", "S4", "S5", "S6"};
    return names;
}

inline SuiteParams default_params(const std::string &suite)
{
    SuiteParams p;
    if (suite == "S1") {
        p.curves = {"p1", "elliptic:0"};
        p.qs = {2, 3};
        p.dmax = 5;
    } else if (suite == "S2") {
        p.curves = {"p1"};
        p.ranks = {2, 3};
        p.qs = {2, 3};
        p.spread = 12;
    } else if (suite == "S3") {
        p.qs = {2, 3, 4, 5};
        p.dmax = 8;
    } else if (suite == "S4") {
        p.curves = {"p1", "elliptic:0", "elliptic:1"};
        p.ranks = {1, 2};
        p.prec = 12;
        p.symbolic = true;
        p.specialize_qs = {2, 3};
    } else if (suite == "S5") {
        p.curves = {"p1", "elliptic:0"};
        p.ranks = {1, 2, 3};
        p.prec = 10;
        p.symbolic = true;
        p.specialize_qs = {2, 3};
    } else if (suite == "S6") {
        p.curves = {"p1"};
        p.ranks = {2, 3};
        p.qs = {2, 3};
        p.spread = 12;
    } else {
        throw precondition_violation("unknown suite '" + suite + "' (expected S1..S6 or all)");
    }
    return p;
}

using Task = std::function<VerificationReport()>;

// MOTIVIC_THREADS overrides the worker count; results keep task order.
inline unsigned thread_count()
{
    if (const char *env = std::getenv("MOTIVIC_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 256) {
            return static_cast<unsigned>(v);
        }
    }
    return std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
}

inline std::vector<VerificationReport> run_tasks(const std::vector<Task> &tasks, unsigned threads = thread_count())
{
    std::vector<VerificationReport> out(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            const auto t0 = std::chrono::steady_clock::now();
            try {
                out[i] = tasks[i]();
                out[i].pass = decide(out[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
            out[i].elapsed_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < n; ++k) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

namespace detail
{

inline std::string hypothesis_note(const NumericCurve &c)
{
    const Rational n1 = point_count(c, 1);
    return "N_1 = " + motivic::to_string(n1) + (n1 > 0 ? " (C(F_q) nonempty)" : " (C(F_q) EMPTY: stated hypothesis fails)");
}

inline const char *symbolic_hypothesis_note()
{
    return "C(k) nonempty is not checked for the formal q";
}

inline VerificationReport report(std::string suite, std::string identity, std::string item, Payload left,
                                 Payload right, Comparison cmp = Comparison::exact)
{
    VerificationReport r;
    r.suite = std::move(suite);
    r.identity = std::move(identity);
    r.item = std::move(item);
    r.left = std::move(left);
    r.right = std::move(right);
    r.comparison = cmp;
    return r;
}

inline std::string qn(long q)
{
    return "q=" + std::to_string(q);
}

inline void require_p1(const SuiteParams &p, const std::string &suite)
{
    for (const auto &c : p.curves) {
        if (c != "p1") {
            throw precondition_violation(suite + " enumerates splitting types and only supports --curve p1");
        }
    }
}

} // namespace detail

// S1: count(Coh0(d)) against the points-and-partitions oracle.
inline std::vector<Task> suite_s1(const SuiteParams &p)
{
    std::vector<Task> tasks;
    for (const auto &cname : p.curves) {
        const CurveSpec spec = resolve_curve(cname);
        for (long q : p.qs) {
            for (int d = 0; d <= p.dmax; ++d) {
                tasks.push_back([spec, q, d] {
                    const NumericCurve c = spec.numeric(q);
                    const ScalarCountBackend backend(c);
                    auto r = detail::report("S1", "torsion_vs_oracle",
                                            spec.descriptor + " " + detail::qn(q) + " d=" + std::to_string(d),
                                            ExactScalar(count(StackId::coh0(d), backend, Rational(0)).value),
                                            ExactScalar(oracles::torsion_count_bruteforce(c, d)));
                    r.notes.push_back(detail::hypothesis_note(c));
                    return r;
                });
            }
        }
    }
    return tasks;
}

// S2: splitting-type oracle brackets around the closed-form #Bun_{n,0}(P^1), and its width.
inline std::vector<Task> suite_s2(const SuiteParams &p)
{
    detail::require_p1(p, "S2");
    std::vector<Task> tasks;
    for (int n : p.ranks) {
        for (long q : p.qs) {
            const std::string item = "n=" + std::to_string(n) + " " + detail::qn(q) + " spread<="
                                     + std::to_string(p.spread);
            auto make = [n, q, p, item](bool width) {
                return [n, q, p, item, width] {
                    const NumericCurve c = presets::numeric_p1(q);
                    const auto bf = oracles::bun_p1_bruteforce(n, 0, q, p.spread);
                    const Rational closed = count(StackId::bun(n, 0), ScalarCountBackend(c), Rational(0)).value;
                    auto r = detail::report("S2", width ? "bun_bracket_width" : "bun_bracket", item,
                                            interval(bf.partial_sum, bf.tail_bound), ExactScalar(closed),
                                            Comparison::within);
                    if (width) {
                        r.epsilon = p.width_target;
                    }
                    r.notes.push_back(std::to_string(bf.types_counted) + " splitting types");
                    return r;
                };
            };
            tasks.push_back(make(false));
            tasks.push_back(make(true));
        }
    }
    return tasks;
}

// S3: local torsion series against r^{d(d-1)} / |GL_d(F_r)|, and the matrix
// centralizer census against the Hall formula.
inline std::vector<Task> suite_s3(const SuiteParams &p)
{
    std::vector<Task> tasks;
    for (long r : p.qs) {
        for (int d = 0; d <= p.dmax; ++d) {
            tasks.push_back([r, d] {
                return detail::report("S3", "local_closed_form", "r=" + std::to_string(r) + " d=" + std::to_string(d),
                                      ExactScalar(oracles::local_torsion_series(r, d + 1).coeff(d)),
                                      ExactScalar(oracles::local_torsion_closed_form(r, d)));
            });
        }
    }
    for (long q : p.qs) {
        if (q != 2 && q != 3) {
            continue;
        }
        for (int d = 1; d <= std::min(p.dmax, 3); ++d) {
            // One census per (d, q); the items below read it through a shared pointer.
            auto census = std::make_shared<std::optional<oracles::CentralizerCensus>>();
            auto once = std::make_shared<std::once_flag>();
            auto get = [census, once, d, q]() -> const oracles::CentralizerCensus & {
                std::call_once(*once, [&] { *census = oracles::centralizer_bruteforce(d, q); });
                return **census;
            };
            const std::string base = "d=" + std::to_string(d) + " " + detail::qn(q);
            tasks.push_back([get, base, d, q] {
                const auto &c = get();
                auto r = detail::report("S3", "nilpotent_count", base, ExactScalar(Rational(c.nilpotent_count)),
                                        ExactScalar(Rational(ipow(Integer(q), static_cast<unsigned long>(d * (d - 1))))));
                for (const auto &e : c.entries) {
                    r.notes.push_back("type " + e.jordan_type.str() + ": " + std::to_string(e.class_size)
                                      + " matrices, centralizer " + std::to_string(e.centralizer_order));
                }
                return r;
            });
            for (const auto &lambda : oracles::partitions_of(d)) {
                tasks.push_back([get, base, lambda] {
                    const auto &c = get();
                    for (const auto &e : c.entries) {
                        if (e.jordan_type == lambda) {
                            return detail::report("S3", "centralizer_vs_hall", base + " type " + lambda.str(),
                                                  ExactScalar(Rational(e.centralizer_order)),
                                                  ExactScalar(Rational(e.hall_order)));
                        }
                    }
                    return detail::report("S3", "centralizer_vs_hall", base + " type " + lambda.str(),
                                          ExactScalar(Rational(0)), ExactScalar(Rational(1)));
                });
                tasks.push_back([get, base, lambda] {
                    const auto &c = get();
                    for (const auto &e : c.entries) {
                        if (e.jordan_type == lambda) {
                            return detail::report("S3", "orbit_stabilizer", base + " type " + lambda.str(),
                                                  ExactScalar(Rational(Integer(e.class_size) * e.centralizer_order)),
                                                  ExactScalar(Rational(c.gl_order)));
                        }
                    }
                    return detail::report("S3", "orbit_stabilizer", base + " type " + lambda.str(),
                                          ExactScalar(Rational(0)), ExactScalar(Rational(c.gl_order)));
                });
            }
        }
    }
    return tasks;
}

namespace detail
{

// Graded work for one curve in one mode. Symbolic runs add mode-consistency items that
// specialize both sides at each q0 and compare with independent numeric-mode runs.
template <typename Body>
void for_graded_curves(const SuiteParams &p, const std::string &suite, std::vector<Task> &tasks, Body body)
{
    for (const auto &cname : p.curves) {
        const CurveSpec spec = resolve_curve(cname);
        if (p.symbolic) {
            body(spec, std::optional<long>{});
        } else {
            if (p.qs.empty()) {
                throw precondition_violation(suite + " in numeric mode needs --q");
            }
            for (long q : p.qs) {
                body(spec, std::optional<long>{q});
            }
        }
    }
}

template <coefficient_ring R>
GradedCountBackend<R> graded_backend(const CurveSpec &spec, std::optional<long> q, int prec, int extra = 0)
{
    if constexpr (std::is_same_v<R, LaurentQ>) {
        return GradedCountBackend<R>(spec.symbolic(), prec, extra);
    } else {
        return GradedCountBackend<R>(spec.numeric(*q), prec, extra);
    }
}

inline std::string mode_tag(std::optional<long> q)
{
    return q ? qn(*q) : std::string("symbolic");
}

template <coefficient_ring R>
std::string curve_note(const CurveData<R> &c)
{
    if constexpr (std::is_same_v<R, Rational>) {
        return hypothesis_note(c);
    } else {
        return symbolic_hypothesis_note();
    }
}

} // namespace detail

// S4: torsion stratification sum against the zeta product for Coh(n, d).
inline std::vector<Task> suite_s4(const SuiteParams &p)
{
    std::vector<Task> tasks;
    detail::for_graded_curves(p, "S4", tasks, [&](const CurveSpec &spec, std::optional<long> q) {
        for (int n : p.ranks) {
            const std::string item = spec.descriptor + " " + detail::mode_tag(q) + " n=" + std::to_string(n)
                                     + " prec=" + std::to_string(p.prec);
            auto run = [spec, q, n, prec = p.prec, item]<typename R>(R) {
                const auto backend = detail::graded_backend<R>(spec, q, prec);
                auto r = detail::report("S4", "stratified_vs_product", item,
                                        to_payload(stratified_coh_count(n, 0, backend)),
                                        to_payload(count(StackId::coh(n, 0), backend)), Comparison::valuation);
                r.valuation = prec;
                r.notes.push_back(detail::curve_note(backend.curve_data()));
                return r;
            };
            if (q) {
                tasks.push_back([run] { return run(Rational()); });
            } else {
                tasks.push_back([run] { return run(LaurentQ()); });
            }
            // Zeta cutoff policy: five more summands per factor change nothing below prec.
            tasks.push_back([spec, q, n, prec = p.prec, item] {
                auto body = [&]<typename R>(R) {
                    const auto a = detail::graded_backend<R>(spec, q, prec);
                    const auto b = detail::graded_backend<R>(spec, q, prec, 5);
                    auto r = detail::report("S4", "zeta_cutoff_stable", item, to_payload(count(StackId::coh(n, 0), a)),
                                            to_payload(count(StackId::coh(n, 0), b)), Comparison::valuation);
                    r.valuation = prec;
                    return r;
                };
                return q ? body(Rational()) : body(LaurentQ());
            });
            if (!q) {
                for (long q0 : p.specialize_qs) {
                    for (int side = 0; side < 2; ++side) {
                        tasks.push_back([spec, q0, n, side, prec = p.prec, item] {
                            const GradedCountBackend<LaurentQ> sym(spec.symbolic(), prec);
                            const GradedCountBackend<Rational> num(spec.numeric(q0), prec);
                            const auto s = side == 0 ? stratified_coh_count(n, 0, sym) : count(StackId::coh(n, 0), sym);
                            const auto v = side == 0 ? stratified_coh_count(n, 0, num) : count(StackId::coh(n, 0), num);
                            return detail::report("S4", side == 0 ? "mode_consistency_stratified" : "mode_consistency_product",
                                                  item + " at " + detail::qn(q0), to_payload(specialize(s, q0)),
                                                  to_payload(v));
                        });
                    }
                }
            }
        }
    });
    return tasks;
}

// S5: rank independence of the dimension-normalized Coh(n, d) series q^{-n^2(g-1)} #Coh_{n,d}
// along the n-dependent routes (torsion stratification; Bun(n) times the zeta factors k >= n),
// plus the exact prefactor relation between raw counts.
inline std::vector<Task> suite_s5(const SuiteParams &p)
{
    std::vector<Task> tasks;
    if (p.ranks.empty()) {
        return tasks;
    }
    const int n0 = p.ranks.front();
    detail::for_graded_curves(p, "S5", tasks, [&](const CurveSpec &spec, std::optional<long> q) {
        const std::string base = spec.descriptor + " " + detail::mode_tag(q) + " prec=" + std::to_string(p.prec);
        for (int n : p.ranks) {
            if (n == n0) {
                continue;
            }
            const std::string item = base + " n=" + std::to_string(n0) + " vs n=" + std::to_string(n);
            for (int route = 0; route < 3; ++route) {
                tasks.push_back([spec, q, n, n0, route, prec = p.prec, item] {
                    auto body = [&]<typename R>(R) {
                        const auto backend = detail::graded_backend<R>(spec, q, prec);
                        const R Q = backend.curve_data().q;
                        const int g = backend.curve_data().genus;
                        auto normalized = [&](int k) {
                            const long dim = stack_dim(StackId::coh(k, 0), g);
                            const auto raw = route == 0 ? stratified_coh_count(k, 0, backend)
                                                        : coh_count_from_bun(k, backend);
                            return (power(Q, -dim) * raw).truncated(prec);
                        };
                        if (route == 2) {
                            // raw counts: #Coh_{n} = q^{(n^2 - n0^2)(g-1)} #Coh_{n0}
                            const long shift = static_cast<long>(n * n - n0 * n0) * (g - 1);
                            auto r = detail::report("S5", "raw_count_prefactor", item,
                                                    to_payload(count(StackId::coh(n, 0), backend)),
                                                    to_payload((power(Q, shift) * count(StackId::coh(n0, 0), backend))
                                                                   .truncated(prec)),
                                                    Comparison::exact);
                            r.notes.push_back(detail::curve_note(backend.curve_data()));
                            return r;
                        }
                        return detail::report("S5", route == 0 ? "rank_independence_stratified" : "rank_independence_bun",
                                              item, to_payload(normalized(n0)), to_payload(normalized(n)),
                                              Comparison::exact);
                    };
                    return q ? body(Rational()) : body(LaurentQ());
                });
            }
        }
        if (!q) {
            for (long q0 : p.specialize_qs) {
                for (int n : p.ranks) {
                    tasks.push_back([spec, q0, n, prec = p.prec, base] {
                        const GradedCountBackend<LaurentQ> sym(spec.symbolic(), prec);
                        const GradedCountBackend<Rational> num(spec.numeric(q0), prec);
                        return detail::report("S5", "mode_consistency_bun_route",
                                              base + " n=" + std::to_string(n) + " at " + detail::qn(q0),
                                              to_payload(specialize(coh_count_from_bun(n, sym), q0)),
                                              to_payload(coh_count_from_bun(n, num)));
                    });
                }
            }
        }
    });
    return tasks;
}

// S6: degree independence. Oracle brackets for d = 0 and d = 1 overlap and both contain
// the closed form; the formula side is d-free.
inline std::vector<Task> suite_s6(const SuiteParams &p)
{
    detail::require_p1(p, "S6");
    std::vector<Task> tasks;
    for (int n : p.ranks) {
        for (long q : p.qs) {
            const std::string item = "n=" + std::to_string(n) + " " + detail::qn(q) + " spread<="
                                     + std::to_string(p.spread);
            tasks.push_back([n, q, p, item] {
                const auto b0 = oracles::bun_p1_bruteforce(n, 0, q, p.spread);
                const auto b1 = oracles::bun_p1_bruteforce(n, 1, q, p.spread);
                return detail::report("S6", "oracle_brackets_overlap", item + " d=0 vs d=1",
                                      interval(b0.partial_sum, b0.tail_bound), interval(b1.partial_sum, b1.tail_bound),
                                      Comparison::overlap);
            });
            for (long d : {0L, 1L}) {
                tasks.push_back([n, q, p, d, item] {
                    const auto b = oracles::bun_p1_bruteforce(n, d, q, p.spread);
                    const Rational closed = bun_closed_form(presets::numeric_p1(q), n);
                    return detail::report("S6", "oracle_bracket_contains_closed_form",
                                          item + " d=" + std::to_string(d), interval(b.partial_sum, b.tail_bound),
                                          ExactScalar(closed), Comparison::within);
                });
            }
            tasks.push_back([n, q, item] {
                const ScalarCountBackend backend(presets::numeric_p1(q));
                return detail::report("S6", "formula_degree_free", item + " d=0 vs d=1",
                                      ExactScalar(count(StackId::bun(n, 0), backend, Rational(0)).value),
                                      ExactScalar(count(StackId::bun(n, 1), backend, Rational(0)).value));
            });
        }
    }
    return tasks;
}

inline std::vector<Task> suite_tasks(const std::string &suite, const SuiteParams &p)
{
    if (suite == "S1") {
        return suite_s1(p);
    }
    if (suite == "S2") {
        return suite_s2(p);
    }
    if (suite == "S3") {
        return suite_s3(p);
    }
    if (suite == "S4") {
        return suite_s4(p);
    }
    if (suite == "S5") {
        return suite_s5(p);
    }
    if (suite == "S6") {
        return suite_s6(p);
    }
    throw precondition_violation("unknown suite '" + suite + "' (expected S1..S6 or all)");
}

inline std::vector<VerificationReport> run_suite(const std::string &suite, const SuiteParams &p)
{
    return run_tasks(suite_tasks(suite, p));
}

// S1..S6 with default parameters, in that order.
inline std::vector<VerificationReport> run_all()
{
    std::vector<Task> tasks;
    for (const auto &s : suite_names()) {
        auto t = suite_tasks(s, default_params(s));
        tasks.insert(tasks.end(), t.begin(), t.end());
    }
    return run_tasks(tasks);
}

} // namespace motivic::verify

#endif

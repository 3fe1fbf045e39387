#ifndef MOTIVIC_MODULI_HPP
#define MOTIVIC_MODULI_HPP

#include <optional>
#include <string>
#include <vector>

#include <motivic/curve.hpp>
#include <motivic/errors.hpp>
#include <motivic/motive_expr.hpp>
#include <motivic/rational.hpp>
#include <motivic/realization.hpp>
#include <motivic/trunc_series.hpp>

namespace motivic
{

// Coh0(d): torsion sheaves of degree d; Bun(n, d): vector bundles; Coh(n, d): all
// coherent sheaves of rank n > 0 and degree d.
struct StackId {
    enum class Kind { coh0, bun, coh };
    Kind kind = Kind::coh0;
    int rank = 0;
    long degree = 0;

    static StackId coh0(long d)
    {
        if (d < 0) {
            throw precondition_violation("torsion degree must be >= 0");
        }
        return {Kind::coh0, 0, d};
    }
    static StackId bun(int n, long d)
    {
        if (n < 1) {
            throw precondition_violation("bundle rank must be >= 1");
        }
        return {Kind::bun, n, d};
    }
    static StackId coh(int n, long d)
    {
        if (n < 1) {
            throw precondition_violation("Coh rank must be >= 1 (use coh0 for torsion)");
        }
        return {Kind::coh, n, d};
    }

    std::string str() const
    {
        switch (kind) {
        case Kind::coh0:
            return "coh0:" + std::to_string(degree);
        case Kind::bun:
            return "bun:" + std::to_string(rank) + "," + std::to_string(degree);
        case Kind::coh:
            return "coh:" + std::to_string(rank) + "," + std::to_string(degree);
        }
        return "?";
    }
};

// Number of zeta factors Z(C, Q{i}), i = 1..max_factor, kept in the Coh product.
struct ZetaCutoff {
    int max_factor = 0;

    // ZetaFactor(i) - 1 has u-adic valuation i, so factors with i >= prec are invisible.
    static ZetaCutoff symbolic(int prec)
    {
        return {std::max(prec - 1, 0)};
    }
};

inline constexpr int default_factor_limit = 4096;

// Rigorous bound B on |log prod_{i > I} Z_C(Q^{-(i+1)})|, from N_m <= (2 + 2g) Q^m:
// B = (2 + 2g) Q^{-I} / ((Q - 1)(1 - Q^{-(I+1)})).
inline Rational coh_log_tail_bound(const Rational &Q, int genus, int I)
{
    const Rational qi = power(Q, -static_cast<long>(I));
    return Rational(2 + 2 * genus) * qi / ((Q - 1) * (1 - qi / Q));
}

// Smallest I whose tail bound, applied to a product of magnitude `scale`, is below target.
inline int numeric_coh_cutoff(const Rational &Q, int genus, const Rational &target, const Rational &scale,
                              int factor_limit = default_factor_limit)
{
    for (int I = 0; I <= factor_limit; ++I) {
        const Rational B = coh_log_tail_bound(Q, genus, I);
        if (B < 1 && abs(scale) * B / (1 - B) <= target) {
            return I;
        }
    }
    throw precision_unachievable("tail target " + to_string(target) + " needs more than "
                                 + std::to_string(factor_limit) + " zeta factors");
}

// Motives of the stacks: Coh0(d) -> Sym^d(C x BGm); Bun(n, d) -> Jac x BGm x Z(C,Q{1..n-1});
// Coh(n, d) -> Jac x BGm x Z(C, Q{1..max_factor}). No dependence on d.
inline MotiveExpr motive_of(const StackId &s, const ZetaCutoff &cutoff = {})
{
    const MotiveExpr gerbe = MotiveExpr::tensor({MotiveExpr::curve(), MotiveExpr::bgm()});
    std::vector<MotiveExpr> factors{MotiveExpr::jacobian(), MotiveExpr::bgm()};
    switch (s.kind) {
    case StackId::Kind::coh0:
        return normalize(MotiveExpr::sym(static_cast<int>(s.degree), gerbe));
    case StackId::Kind::bun:
        for (int i = 1; i < s.rank; ++i) {
            factors.push_back(MotiveExpr::zeta(i));
        }
        return normalize(MotiveExpr::tensor(factors));
    case StackId::Kind::coh:
        for (int i = 1; i <= cutoff.max_factor; ++i) {
            factors.push_back(MotiveExpr::zeta(i));
        }
        return normalize(MotiveExpr::tensor(factors));
    }
    throw precondition_violation("unknown stack kind");
}

// Dimension ledger: Coh0(d) -> 0, Bun/Coh(n, d) -> n^2 (g - 1).
inline long stack_dim(const StackId &s, int genus)
{
    if (s.kind == StackId::Kind::coh0) {
        return 0;
    }
    return static_cast<long>(s.rank) * s.rank * (genus - 1);
}

// Numeric groupoid count with the rigorous bound on what the truncation omitted.
struct NumericCount {
    Rational value;
    Rational tail_bound = 0;
    int terms_used = 0; // zeta factors (Coh) or strata (stratified sums)
};

// #X(F_{q^n}) for a fixed integer q. Coh counts are truncated products with
// |exact - value| <= tail_bound <= target.
inline NumericCount count(const StackId &s, const ScalarCountBackend &backend, const Rational &target, int n = 1)
{
    const int g = backend.curve().genus;
    const long dim = stack_dim(s, g);
    if (s.kind != StackId::Kind::coh) {
        return {groupoid_count(motive_of(s), dim, backend, n), 0, 0};
    }
    const Rational Q = power(backend.q(), n);
    // Every partial product is at most |base| e^{B0}; e^x <= (1 - x/k)^{-k} for k > x.
    const Rational base = groupoid_count(motive_of(s, {0}), dim, backend, n);
    const Rational B0 = coh_log_tail_bound(Q, g, 0);
    const long k = static_cast<long>(numerator(B0) / denominator(B0)) * 2 + 2;
    const Rational scale = abs(base) * power(Rational(1 / (1 - B0 / k)), k);
    const int I = numeric_coh_cutoff(Q, g, target, scale);
    const Rational value = groupoid_count(motive_of(s, {I}), dim, backend, n);
    const Rational B = coh_log_tail_bound(Q, g, I);
    return {value, abs(value) * B / (1 - B), I};
}

// Graded (u-series) groupoid count. Coh counts multiply the zeta factors through
// product_family with declared valuation bounds val(Z(C,Q{i}) - 1) >= i.
template <coefficient_ring R>
TruncSeries<R> count(const StackId &s, const GradedCountBackend<R> &backend, int n = 1)
{
    const long dim = stack_dim(s, backend.curve_data().genus);
    if (s.kind != StackId::Kind::coh) {
        return groupoid_count(motive_of(s), dim, backend, n);
    }
    const Evaluator<GradedCountBackend<R>> eval(backend);
    const auto head = eval(MotiveExpr::tensor({MotiveExpr::jacobian(), MotiveExpr::bgm()}), n);
    auto source = [&](std::size_t k) -> std::optional<ProductFactor<R>> {
        const int i = static_cast<int>(k) + 1;
        if (i >= backend.prec()) {
            return ProductFactor<R>{TruncSeries<R>::one('u', backend.prec()), i};
        }
        return ProductFactor<R>{eval(MotiveExpr::zeta(i), n), i};
    };
    const auto tail = product_family<R>('u', source, backend.prec());
    return (power(backend.curve_data().q, dim * n) * (head * tail)).truncated(backend.prec());
}

// Graded Coh(n, d) through the Bun factorization: #Bun_{n,d} * prod_{k >= n} Z(C, Q{k}).
// Same limit as count(Coh(n, d)), assembled along an n-dependent route.
template <coefficient_ring R>
TruncSeries<R> coh_count_from_bun(int n, const GradedCountBackend<R> &backend, int ext = 1)
{
    const Evaluator<GradedCountBackend<R>> eval(backend);
    const auto bun = count(StackId::bun(n, 0), backend, ext);
    auto source = [&](std::size_t k) -> std::optional<ProductFactor<R>> {
        const int i = n + static_cast<int>(k);
        if (i >= backend.prec()) {
            return ProductFactor<R>{TruncSeries<R>::one('u', backend.prec()), i};
        }
        return ProductFactor<R>{eval(MotiveExpr::zeta(i), ext), i};
    };
    const auto tail = product_family<R>('u', source, backend.prec());
    return (bun * tail).truncated(backend.prec());
}

// Siegel-type closed form, independent of the motive evaluator:
// #Bun_{n,d}(F_Q) = Q^{(n^2-1)(g-1)} #Jac(F_Q) / (Q - 1) prod_{i=2}^n Z_C(Q^{-i}).
inline Rational bun_closed_form(const NumericCurve &c, int n, int ext = 1)
{
    const Rational Q = power(c.q, ext);
    Rational v = power(Q, static_cast<long>(n * n - 1) * (c.genus - 1)) * jac_count(c, ext) / (Q - 1);
    for (int i = 2; i <= n; ++i) {
        v *= zeta_closed_form(c, ext, power(Q, -i));
    }
    return v;
}

// Geometric bound on sum_{e > E} #Coh_{0,e} x^e with x = Q^{-n}: the coefficients are
// nonnegative and F(r) = sum_e #Coh_{0,e} r^e <= (1 - r)^{-(4 + 4g)}; take r = (1 + x)/2.
inline Rational stratified_tail_factor(const Rational &Q, int genus, int n, int E)
{
    const Rational x = power(Q, -n);
    const Rational r = (1 + x) / 2;
    const Rational ratio = x / r;
    const Rational F = power(Rational(1 / (1 - r)), 4 + 4 * genus);
    return F * power(ratio, E + 1) / (1 - ratio);
}

// Torsion stratification sum_{e=0}^{E} Q^{-ne} #Coh_{0,e} #Bun_{n,d-e} over F_Q, Q = q^ext.
// With e_max unset, E is the smallest cutoff whose tail bound is <= target.
inline NumericCount stratified_coh_count(int n, long d, const ScalarCountBackend &backend, std::optional<int> e_max,
                                         const Rational &target, int ext = 1, int term_limit = 2000)
{
    (void)d; // Bun_{n, d-e} does not depend on d - e.
    const int g = backend.curve().genus;
    const Rational Q = power(backend.q(), ext);
    const Rational bun = count(StackId::bun(n, 0), backend, target, ext).value;
    int E = 0;
    if (e_max) {
        E = *e_max;
    } else {
        while (abs(bun) * stratified_tail_factor(Q, g, n, E) > target) {
            if (++E > term_limit) {
                throw precision_unachievable("stratified sum: tail target " + to_string(target) + " needs more than "
                                             + std::to_string(term_limit) + " strata");
            }
        }
    }
    const Evaluator<ScalarCountBackend> eval(backend);
    const auto torsion = eval.sym_powers(MotiveExpr::tensor({MotiveExpr::curve(), MotiveExpr::bgm()}), E, ext);
    Rational acc = 0;
    for (int e = 0; e <= E; ++e) {
        acc += power(Q, -static_cast<long>(n) * e) * torsion[static_cast<std::size_t>(e)] * bun;
    }
    return {acc, abs(bun) * stratified_tail_factor(Q, g, n, E), E};
}

// Graded stratified sum: sum_{e : ne < prec} Tate(ne) * #Coh_{0,e} * #Bun_{n,d-e}.
// Stratum e has u-adic valuation >= ne, so the truncation is exact to prec.
template <coefficient_ring R>
TruncSeries<R> stratified_coh_count(int n, long d, const GradedCountBackend<R> &backend, int ext = 1)
{
    (void)d;
    const int E = (backend.prec() - 1) / n;
    const Evaluator<GradedCountBackend<R>> eval(backend);
    const auto bun = count(StackId::bun(n, 0), backend, ext);
    const auto torsion = eval.sym_powers(MotiveExpr::tensor({MotiveExpr::curve(), MotiveExpr::bgm()}), E, ext);
    TruncSeries<R> acc('u', backend.prec());
    for (int e = 0; e <= E; ++e) {
        acc += backend.tate(n * e, ext) * torsion[static_cast<std::size_t>(e)];
    }
    return (acc * bun).truncated(backend.prec());
}

} // namespace motivic

#endif

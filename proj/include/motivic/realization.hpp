#ifndef MOTIVIC_REALIZATION_HPP
#define MOTIVIC_REALIZATION_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <motivic/curve.hpp>
#include <motivic/errors.hpp>
#include <motivic/motive_expr.hpp>
#include <motivic/rational.hpp>
#include <motivic/trunc_series.hpp>

namespace motivic
{

// Generic evaluator shared by all realizations. A backend supplies the generator
// values at extension degree n, the Adams operation psi^m on values, and division by
// integers. Sum and Tensor map to + and *; Sym(d, e) is the coefficient of t^d in
// exp(sum_m psi^m(ev_{nm}(e)) t^m / m), computed by the Newton recursion
// h_d = (1/d) sum_{m=1}^d p_m h_{d-m}.
template <typename Backend>
class Evaluator
{
public:
    using value_type = typename Backend::value_type;

    explicit Evaluator(const Backend &backend) : m_backend(backend) {}

    value_type operator()(const MotiveExpr &e, int n) const
    {
        if (n < 1) {
            throw precondition_violation("extension degree must be positive");
        }
        switch (e.kind()) {
        case MotiveKind::unit:
            return m_backend.one();
        case MotiveKind::tate:
            return m_backend.tate(e.index(), n);
        case MotiveKind::curve:
            return m_backend.curve(n);
        case MotiveKind::jacobian:
            return m_backend.jacobian(n);
        case MotiveKind::bgm:
            return m_backend.bgm(n);
        case MotiveKind::zeta:
            return m_backend.zeta(e.index(), n, *this);
        case MotiveKind::sum: {
            value_type acc = (*this)(e.children().front(), n);
            for (std::size_t i = 1; i < e.children().size(); ++i) {
                acc = acc + (*this)(e.children()[i], n);
            }
            return acc;
        }
        case MotiveKind::tensor: {
            value_type acc = (*this)(e.children().front(), n);
            for (std::size_t i = 1; i < e.children().size(); ++i) {
                acc = acc * (*this)(e.children()[i], n);
            }
            return acc;
        }
        case MotiveKind::sym:
            return sym_powers(e.child(), e.index(), n).back();
        }
        throw precondition_violation("unknown motive kind");
    }

    // Realizations of Sym^0(e), ..., Sym^dmax(e) at extension n.
    std::vector<value_type> sym_powers(const MotiveExpr &e, int dmax, int n) const
    {
        std::vector<value_type> p;
        p.reserve(static_cast<std::size_t>(dmax));
        for (int m = 1; m <= dmax; ++m) {
            p.push_back(m_backend.adams((*this)(e, n * m), m));
        }
        std::vector<value_type> h;
        h.reserve(static_cast<std::size_t>(dmax) + 1);
        h.push_back(m_backend.one());
        for (int d = 1; d <= dmax; ++d) {
            value_type acc = p[0] * h[static_cast<std::size_t>(d - 1)];
            for (int m = 2; m <= d; ++m) {
                acc = acc + p[static_cast<std::size_t>(m - 1)] * h[static_cast<std::size_t>(d - m)];
            }
            h.push_back(m_backend.divide(acc, d));
        }
        return h;
    }

    const Backend &backend() const noexcept
    {
        return m_backend;
    }

private:
    const Backend &m_backend;
};

// Counting realization with exact rational values at a fixed integer q.
// ev_n(Tate(i)) = q^{-ni}, ev_n(C) = N_n / q^n, ev_n(Jac) = #Jac(F_{q^n}) / q^{gn},
// ev_n(BGm) = 1 / (1 - q^{-n}); ZetaFactor(i) is the convergent sum
// sum_j #Sym^j C(F_{q^n}) q^{-n(i+1)j}, evaluated in closed form.
class ScalarCountBackend
{
public:
    using value_type = Rational;

    explicit ScalarCountBackend(NumericCurve curve) : m_curve(std::move(curve))
    {
        validate(m_curve);
    }

    const NumericCurve &curve() const noexcept
    {
        return m_curve;
    }
    const Rational &q() const noexcept
    {
        return m_curve.q;
    }

    Rational one() const
    {
        return 1;
    }
    Rational tate(int i, int n) const
    {
        return power(m_curve.q, -static_cast<long>(n) * i);
    }
    Rational curve(int n) const
    {
        return point_count(m_curve, n) / power(m_curve.q, n);
    }
    Rational jacobian(int n) const
    {
        return jac_count(m_curve, n) / power(m_curve.q, static_cast<long>(m_curve.genus) * n);
    }
    Rational bgm(int n) const
    {
        return 1 / (1 - power(m_curve.q, -n));
    }
    template <typename Eval>
    Rational zeta(int i, int n, const Eval &) const
    {
        return zeta_closed_form(m_curve, n, power(m_curve.q, -static_cast<long>(n) * (i + 1)));
    }
    Rational adams(const Rational &v, int) const
    {
        return v;
    }
    Rational divide(const Rational &v, long k) const
    {
        return v / k;
    }

private:
    NumericCurve m_curve;
};

// Counting realization graded by Tate-twist degree: values are truncated series in
// the bookkeeping variable u with coefficients in R (Rational at fixed q, LaurentQ for
// formal q). Tate(i) -> u^i q^{-ni}; the realized count is the value at u = 1.
// The Adams operation acts by u -> u^m. ZetaFactor(i) keeps the summands with ij < prec;
// every omitted summand has u-adic valuation >= ij >= prec.
template <coefficient_ring R>
class GradedCountBackend
{
public:
    using value_type = TruncSeries<R>;
    static constexpr char variable = 'u';

    GradedCountBackend(CurveData<R> curve, int prec, int zeta_extra_terms = 0)
        : m_curve(std::move(curve)), m_prec(prec), m_extra(zeta_extra_terms)
    {
        if (prec < 1) {
            throw precondition_violation("precision must be >= 1");
        }
        validate(m_curve);
    }

    const CurveData<R> &curve_data() const noexcept
    {
        return m_curve;
    }
    int prec() const noexcept
    {
        return m_prec;
    }

    value_type constant(const R &c) const
    {
        return value_type::monomial(variable, 0, c, m_prec);
    }
    value_type one() const
    {
        return constant(R(1));
    }
    value_type tate(int i, int n) const
    {
        return value_type::monomial(variable, i, power(m_curve.q, -static_cast<long>(n) * i), m_prec);
    }
    value_type curve(int n) const
    {
        return constant(point_count(m_curve, n) * power(m_curve.q, -n));
    }
    value_type jacobian(int n) const
    {
        return constant(jac_count(m_curve, n) * power(m_curve.q, -static_cast<long>(m_curve.genus) * n));
    }
    value_type bgm(int n) const
    {
        std::vector<R> c;
        const R step = power(m_curve.q, -n);
        R term(1);
        for (int k = 0; k < m_prec; ++k) {
            c.push_back(term);
            term = term * step;
        }
        return value_type(variable, 0, std::move(c), m_prec);
    }
    template <typename Eval>
    value_type zeta(int i, int n, const Eval &eval) const
    {
        const int terms = zeta_terms(i) + m_extra;
        const auto h = eval.sym_powers(MotiveExpr::curve(), terms - 1, n);
        value_type acc(variable, m_prec);
        for (int j = 0; j < terms; ++j) {
            acc = acc + h[static_cast<std::size_t>(j)] * tate(i * j, n);
        }
        return acc;
    }
    value_type adams(const value_type &v, int m) const
    {
        return v.substitute_power(m).truncated(m_prec);
    }
    value_type divide(const value_type &v, long k) const
    {
        return v.map_coefficients([k](const R &c) { return divide_integer(c, k); });
    }

    // Number of summands j = 0, 1, ... of ZetaFactor(i) with i j < prec.
    int zeta_terms(int i) const
    {
        return (m_prec + i - 1) / i;
    }

private:
    CurveData<R> m_curve;
    int m_prec;
    int m_extra;
};

// Betti realization (weights dropped) as a series in z:
// Tate(i) -> z^{2i}, C -> 1 + 2g z + z^2, Jac -> (1 + z)^{2g}, BGm -> 1 / (1 - z^2).
// Symmetric powers use the super plethysm, psi^m(z^k) = (-1)^{k(m+1)} z^{km}, so that
// sum_d Sym^d t^d = prod_{k odd} (1 + z^k t)^{b_k} prod_{k even} (1 - z^k t)^{-b_k}.
class BettiBackend
{
public:
    using value_type = TruncSeries<Rational>;
    static constexpr char variable = 'z';

    BettiBackend(int genus, int prec) : m_genus(genus), m_prec(prec)
    {
        if (genus < 0 || prec < 1) {
            throw precondition_violation("Betti realization needs genus >= 0 and prec >= 1");
        }
    }

    int prec() const noexcept
    {
        return m_prec;
    }

    value_type one() const
    {
        return value_type::one(variable, m_prec);
    }
    value_type tate(int i, int) const
    {
        return value_type::monomial(variable, 2 * i, 1, m_prec);
    }
    value_type curve(int) const
    {
        return value_type::polynomial(variable, {1, 2 * m_genus, 1}, m_prec);
    }
    value_type jacobian(int) const
    {
        std::vector<Rational> c(static_cast<std::size_t>(2 * m_genus) + 1);
        Integer binom = 1;
        for (int k = 0; k <= 2 * m_genus; ++k) {
            c[static_cast<std::size_t>(k)] = Rational(binom);
            binom = binom * (2 * m_genus - k) / (k + 1);
        }
        return value_type::polynomial(variable, c, m_prec);
    }
    value_type bgm(int) const
    {
        std::vector<Rational> c(static_cast<std::size_t>(m_prec), Rational(0));
        for (int k = 0; k < m_prec; k += 2) {
            c[static_cast<std::size_t>(k)] = 1;
        }
        return value_type(variable, 0, std::move(c), m_prec);
    }
    template <typename Eval>
    value_type zeta(int i, int n, const Eval &eval) const
    {
        const int terms = (m_prec + 2 * i - 1) / (2 * i);
        const auto h = eval.sym_powers(MotiveExpr::curve(), terms - 1, n);
        value_type acc(variable, m_prec);
        for (int j = 0; j < terms; ++j) {
            acc = acc + h[static_cast<std::size_t>(j)] * tate(i * j, n);
        }
        return acc;
    }
    value_type adams(const value_type &v, int m) const
    {
        const bool odd_flip = (m % 2 == 0);
        return v.substitute_power(m, [odd_flip](int e) { return (odd_flip && (e % 2 != 0)) ? -1 : 1; })
            .truncated(m_prec);
    }
    value_type divide(const value_type &v, long k) const
    {
        return v.map_coefficients([k](const Rational &c) { return Rational(c / k); });
    }

private:
    int m_genus;
    int m_prec;
};

// Realization ev_n(expr) for any backend.
// Series-valued results are reported at exactly the backend precision.
template <typename Backend>
typename Backend::value_type ev(const MotiveExpr &expr, const Backend &backend, int n = 1)
{
    auto v = Evaluator<Backend>(backend)(expr, n);
    if constexpr (requires { backend.prec(); v.truncated(0); }) {
        return v.truncated(backend.prec());
    } else {
        return v;
    }
}

// Groupoid cardinality #X(F_{q^n}) = q^{n dim X} ev_n(M(X)).
inline Rational groupoid_count(const MotiveExpr &expr, long dim, const ScalarCountBackend &backend, int n = 1)
{
    return power(backend.q(), dim * n) * ev(expr, backend, n);
}

template <coefficient_ring R>
TruncSeries<R> groupoid_count(const MotiveExpr &expr, long dim, const GradedCountBackend<R> &backend, int n = 1)
{
    return power(backend.curve_data().q, dim * n) * ev(expr, backend, n);
}

inline TruncSeries<Rational> betti(const MotiveExpr &expr, int genus, int prec)
{
    return ev(expr, BettiBackend(genus, prec), 1);
}

// Extension-indexed values m -> ev_m(expr), m = 1..horizon.
struct CountFunction {
    std::map<int, Rational> values;
    int horizon = 0;
};

inline CountFunction count_function(const MotiveExpr &expr, const ScalarCountBackend &backend, int horizon)
{
    CountFunction f;
    f.horizon = horizon;
    for (int m = 1; m <= horizon; ++m) {
        f.values[m] = ev(expr, backend, m);
    }
    return f;
}

// Substitute q -> q0 coefficientwise.
inline TruncSeries<Rational> specialize(const TruncSeries<LaurentQ> &s, long q0)
{
    const Rational q(q0);
    return s.map_coefficients([&q](const LaurentQ &c) { return c.evaluate(q); });
}

inline NumericCurve specialize(const SymbolicCurve &c, long q0)
{
    NumericCurve out;
    out.q = q0;
    out.genus = c.genus;
    out.label = c.label;
    for (const auto &b : c.numerator) {
        out.numerator.push_back(b.evaluate(Rational(q0)));
    }
    return out;
}

// Partial sum of the series at u = 1 (exact sum of the known coefficients).
template <coefficient_ring R>
R value_at_one(const TruncSeries<R> &s)
{
    R acc(0);
    for (const auto &c : s.coefficients()) {
        acc = acc + c;
    }
    return acc;
}

} // namespace motivic

#endif

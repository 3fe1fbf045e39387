#ifndef MOTIVIC_CURVE_HPP
#define MOTIVIC_CURVE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <motivic/errors.hpp>
#include <motivic/laurent_q.hpp>
#include <motivic/rational.hpp>
#include <motivic/ring.hpp>
#include <motivic/trunc_series.hpp>

namespace motivic
{

// Smooth projective geometrically connected curve over F_q, given by its Weil
// zeta numerator P(T) = prod_i (1 - alpha_i T) = sum_k b_k T^k.
// R = Rational for a fixed integer q, R = LaurentQ for the formal symbol q.
template <coefficient_ring R>
struct CurveData {
    R q;
    int genus = 0;
    std::vector<R> numerator;
    std::string label = "custom";
};

using NumericCurve = CurveData<Rational>;
using SymbolicCurve = CurveData<LaurentQ>;

inline constexpr int default_sanity_horizon = 12;

namespace presets
{

template <coefficient_ring R>
CurveData<R> p1(const R &q)
{
    return CurveData<R>{q, 0, {R(1)}, "p1"};
}

// Elliptic curve with Frobenius trace a: P(T) = 1 - a T + q T^2.
template <coefficient_ring R>
CurveData<R> elliptic(const R &q, long a)
{
    return CurveData<R>{q, 1, {R(1), R(-a), q}, "elliptic(a=" + std::to_string(a) + ")"};
}

inline NumericCurve numeric_p1(long q)
{
    return p1<Rational>(Rational(q));
}

inline SymbolicCurve symbolic_p1()
{
    return p1<LaurentQ>(LaurentQ::q());
}

// Numeric elliptic preset; enforces the Hasse bound a^2 <= 4q.
inline NumericCurve numeric_elliptic(long q, long a)
{
    if (a * a > 4 * q) {
        throw curve_validation_error("elliptic preset violates |a| <= 2 sqrt(q): a = " + std::to_string(a)
                                     + ", q = " + std::to_string(q));
    }
    return elliptic<Rational>(Rational(q), a);
}

inline SymbolicCurve symbolic_elliptic(long a)
{
    return elliptic<LaurentQ>(LaurentQ::q(), a);
}

} // namespace presets

// Power sums p_1..p_count of the Frobenius eigenvalues via Newton's identities:
// p_m = sum_{k=1}^{m-1} (-1)^{k-1} e_k p_{m-k} + (-1)^{m-1} m e_m, e_k = (-1)^k b_k.
template <coefficient_ring R>
std::vector<R> power_sums(const CurveData<R> &c, int count)
{
    const int deg = 2 * c.genus;
    auto e = [&](int k) -> R {
        if (k < 0 || k > deg || k >= static_cast<int>(c.numerator.size())) {
            return R(0);
        }
        return (k % 2 == 0) ? c.numerator[static_cast<std::size_t>(k)] : R(-c.numerator[static_cast<std::size_t>(k)]);
    };
    std::vector<R> p(static_cast<std::size_t>(count) + 1, R(0));
    for (int m = 1; m <= count; ++m) {
        R acc(0);
        for (int k = 1; k < m && k <= deg; ++k) {
            const R term = e(k) * p[static_cast<std::size_t>(m - k)];
            acc = (k % 2 == 1) ? R(acc + term) : R(acc - term);
        }
        if (m <= deg) {
            const R term = R(static_cast<long>(m)) * e(m);
            acc = (m % 2 == 1) ? R(acc + term) : R(acc - term);
        }
        p[static_cast<std::size_t>(m)] = acc;
    }
    return p;
}

template <coefficient_ring R>
R power_sum(const CurveData<R> &c, int m)
{
    return power_sums(c, m)[static_cast<std::size_t>(m)];
}

// N_m = #C(F_{q^m}) = q^m + 1 - p_m.
template <coefficient_ring R>
R point_count(const CurveData<R> &c, int m)
{
    if (m < 1) {
        throw precondition_violation("point_count: extension degree must be positive");
    }
    return power(c.q, m) + R(1) - power_sum(c, m);
}

// Zeta numerator of C over F_{q^m}: coefficients of prod_i (1 - alpha_i^m T),
// with e_k(alpha^m) recovered from p_m, p_{2m}, ... by Newton's identities.
template <coefficient_ring R>
std::vector<R> extension_numerator(const CurveData<R> &c, int m)
{
    const int deg = 2 * c.genus;
    const std::vector<R> p = power_sums(c, deg * m);
    std::vector<R> e(static_cast<std::size_t>(deg) + 1, R(0));
    e[0] = R(1);
    for (int k = 1; k <= deg; ++k) {
        R acc(0);
        for (int i = 1; i <= k; ++i) {
            const R term = e[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i * m)];
            acc = (i % 2 == 1) ? R(acc + term) : R(acc - term);
        }
        e[static_cast<std::size_t>(k)] = divide_integer(acc, k);
    }
    std::vector<R> b(e.size(), R(0));
    for (std::size_t k = 0; k < e.size(); ++k) {
        b[k] = (k % 2 == 0) ? e[k] : R(-e[k]);
    }
    return b;
}

// #Jac(C)(F_{q^m}) = prod_i (1 - alpha_i^m) = P_m(1).
template <coefficient_ring R>
R jac_count(const CurveData<R> &c, int m)
{
    if (m < 1) {
        throw precondition_violation("jac_count: extension degree must be positive");
    }
    R acc(0);
    for (const R &b : extension_numerator(c, m)) {
        acc = acc + b;
    }
    return acc;
}

// Checks b_0 = 1, degree 2g, the functional equation b_{2g-i} = q^{g-i} b_i and,
// for numeric curves, N_m > 0 up to the sanity horizon.
template <coefficient_ring R>
void validate(const CurveData<R> &c, int horizon = default_sanity_horizon)
{
    if (c.genus < 0) {
        throw curve_validation_error("genus must be nonnegative");
    }
    if (c.numerator.size() != static_cast<std::size_t>(2 * c.genus + 1)) {
        throw curve_validation_error("numerator must have 2g + 1 = " + std::to_string(2 * c.genus + 1)
                                     + " coefficients, got " + std::to_string(c.numerator.size()));
    }
    if (!(c.numerator[0] == R(1))) {
        throw curve_validation_error("numerator constant term b_0 must be 1, got " + to_string(c.numerator[0]));
    }
    if (!is_unit(c.q)) {
        throw curve_validation_error("q must be invertible");
    }
    const int g = c.genus;
    for (int i = 0; i <= 2 * g; ++i) {
        const R lhs = c.numerator[static_cast<std::size_t>(2 * g - i)];
        const R rhs = power(c.q, g - i) * c.numerator[static_cast<std::size_t>(i)];
        if (!(lhs == rhs)) {
            throw curve_validation_error("functional equation fails at i = " + std::to_string(i) + ": b_"
                                         + std::to_string(2 * g - i) + " = " + to_string(lhs) + " but q^"
                                         + std::to_string(g - i) + " b_" + std::to_string(i) + " = "
                                         + to_string(rhs));
        }
    }
    if constexpr (std::is_same_v<R, Rational>) {
        if (!is_integer(c.q) || c.q < 2) {
            throw curve_validation_error("numeric q must be an integer >= 2");
        }
        for (const auto &b : c.numerator) {
            if (!is_integer(b)) {
                throw curve_validation_error("numerator coefficients must be integers");
            }
        }
        const std::vector<R> p = power_sums(c, horizon);
        for (int m = 1; m <= horizon; ++m) {
            const R n = power(c.q, m) + R(1) - p[static_cast<std::size_t>(m)];
            if (n <= 0) {
                throw curve_validation_error("nonpositive point count N_" + std::to_string(m) + " = "
                                             + to_string(n));
            }
        }
    } else {
        if (!(c.q == LaurentQ::q())) {
            throw curve_validation_error("symbolic curves use the formal q");
        }
        for (const auto &b : c.numerator) {
            if (!b.is_polynomial() || !b.has_integer_coefficients()) {
                throw curve_validation_error("symbolic numerator coefficients must be integer polynomials in q");
            }
        }
    }
}

inline long moebius(long n)
{
    int result = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            result = -result;
        }
    }
    if (n > 1) {
        result = -result;
    }
    return result;
}

// Number of closed points of degree e: B_e = (1/e) sum_{d | e} mu(e/d) N_d.
inline Integer closed_points(const NumericCurve &c, int e)
{
    if (e < 1) {
        throw precondition_violation("closed_points: degree must be positive");
    }
    Rational acc = 0;
    for (int d = 1; d <= e; ++d) {
        if (e % d == 0) {
            acc += Rational(moebius(e / d)) * point_count(c, d);
        }
    }
    acc /= e;
    if (!is_integer(acc) || acc < 0) {
        throw curve_validation_error("closed-point count B_" + std::to_string(e) + " = " + to_string(acc)
                                     + " is not a nonnegative integer; curve data is corrupted");
    }
    return numerator(acc);
}

struct PointCensus {
    std::map<int, Integer> counts;        // m -> N_m
    std::map<int, Integer> closed_points; // e -> B_e
    int horizon = 0;
};

inline PointCensus census(const NumericCurve &c, int horizon)
{
    PointCensus out;
    out.horizon = horizon;
    for (int m = 1; m <= horizon; ++m) {
        out.counts[m] = numerator(point_count(c, m));
        out.closed_points[m] = closed_points(c, m);
    }
    return out;
}

// sum_j #Sym^j C(F_q) t^j = P(t) / ((1 - t)(1 - q t)), to precision prec.
template <coefficient_ring R>
TruncSeries<R> zeta_series(const CurveData<R> &c, int prec)
{
    const auto num = TruncSeries<R>::polynomial('t', c.numerator, prec);
    const auto den = TruncSeries<R>::polynomial('t', {R(1), R(-(R(1) + c.q)), c.q}, prec);
    return num * invert(den);
}

// Exact value of Z_C(x) = P(x) / ((1 - x)(1 - q x)) over F_{q^m}, for a numeric point x.
inline Rational zeta_closed_form(const NumericCurve &c, int m, const Rational &x)
{
    const Rational qm = power(c.q, m);
    if (x == 1 || qm * x == 1) {
        throw divergent_zeta("zeta function evaluated at its pole");
    }
    Rational num = 0;
    Rational xp = 1;
    for (const auto &b : extension_numerator(c, m)) {
        num += b * xp;
        xp *= x;
    }
    return num / ((1 - x) * (1 - qm * x));
}

} // namespace motivic

#endif

#ifndef MOTIVIC_TRUNC_SERIES_HPP
#define MOTIVIC_TRUNC_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <motivic/errors.hpp>
#include <motivic/ring.hpp>

namespace motivic
{

// Truncated Laurent series sum_{e = lowest}^{prec-1} c_e x^e in a single named
// variable. Coefficients at exponents >= prec are unknown and never reported.
template <coefficient_ring R>
class TruncSeries
{
public:
    using coefficient_type = R;

    TruncSeries(char var, int prec) : TruncSeries(var, 0, {}, prec) {}

    TruncSeries(char var, int lowest, std::vector<R> coeffs, int prec)
        : m_var(var), m_lowest(std::min(lowest, prec)), m_prec(prec), m_coeffs(std::move(coeffs))
    {
        m_coeffs.resize(static_cast<std::size_t>(m_prec - m_lowest), R(0));
    }

    static TruncSeries monomial(char var, int exponent, const R &c, int prec)
    {
        TruncSeries s(var, std::min(exponent, prec), {}, prec);
        if (exponent < prec) {
            s.m_coeffs[0] = c;
        }
        return s;
    }

    static TruncSeries one(char var, int prec)
    {
        return monomial(var, 0, R(1), prec);
    }

    // Polynomial with coefficients for exponents 0, 1, ...; entries past prec are dropped.
    static TruncSeries polynomial(char var, const std::vector<R> &coeffs, int prec)
    {
        std::vector<R> c(coeffs.begin(), coeffs.begin() + std::min<std::ptrdiff_t>(coeffs.size(), std::max(prec, 0)));
        return TruncSeries(var, 0, std::move(c), prec);
    }

    char variable() const noexcept
    {
        return m_var;
    }
    int lowest() const noexcept
    {
        return m_lowest;
    }
    int prec() const noexcept
    {
        return m_prec;
    }
    const std::vector<R> &coefficients() const noexcept
    {
        return m_coeffs;
    }

    R coeff(int e) const
    {
        if (e >= m_prec) {
            throw precondition_violation("coefficient at exponent " + std::to_string(e) + " is beyond precision "
                                         + std::to_string(m_prec));
        }
        if (e < m_lowest) {
            return R(0);
        }
        return m_coeffs[static_cast<std::size_t>(e - m_lowest)];
    }

    // Index of the first nonzero coefficient, or nullopt if zero to precision.
    std::optional<int> valuation() const
    {
        for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
            if (!is_zero(m_coeffs[k])) {
                return m_lowest + static_cast<int>(k);
            }
        }
        return std::nullopt;
    }

    // Valuation with the zero series counted as prec (the tightest provable bound).
    int order() const
    {
        return valuation().value_or(m_prec);
    }

    TruncSeries truncated(int new_prec) const
    {
        if (new_prec >= m_prec) {
            return *this;
        }
        const int lo = std::min(m_lowest, new_prec);
        std::vector<R> c;
        for (int e = lo; e < new_prec; ++e) {
            c.push_back(coeff(e));
        }
        return TruncSeries(m_var, lo, std::move(c), new_prec);
    }

    // Multiply by x^k.
    TruncSeries shifted(int k) const
    {
        return TruncSeries(m_var, m_lowest + k, m_coeffs, m_prec + k);
    }

    // Substitute x -> sign(m, e) * x^m, where the sign depends on the source exponent e.
    // Plain Adams operation when sign is +1 everywhere.
    TruncSeries substitute_power(int m, const std::function<int(int)> &sign = {}) const
    {
        if (m < 1) {
            throw precondition_violation("substitution power must be positive");
        }
        if (m_lowest < 0 && m > 1) {
            throw precondition_violation("power substitution on a series with negative exponents");
        }
        const int new_prec = m_prec * m;
        TruncSeries r(m_var, m_lowest * m, {}, new_prec);
        for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
            const int e = m_lowest + static_cast<int>(k);
            const R &c = m_coeffs[k];
            if (is_zero(c)) {
                continue;
            }
            const int s = sign ? sign(e) : 1;
            r.m_coeffs[static_cast<std::size_t>(e * m - r.m_lowest)] = s < 0 ? R(-c) : c;
        }
        return r;
    }

    template <typename F>
    auto map_coefficients(F &&f) const
    {
        using S = std::decay_t<decltype(f(std::declval<const R &>()))>;
        std::vector<S> c;
        c.reserve(m_coeffs.size());
        for (const auto &x : m_coeffs) {
            c.push_back(f(x));
        }
        return TruncSeries<S>(m_var, m_lowest, std::move(c), m_prec);
    }

    // Coefficientwise agreement on all exponents below order (order <= both precs).
    bool agrees_to(const TruncSeries &o, int order) const
    {
        check_var(o);
        if (order > m_prec || order > o.m_prec) {
            return false;
        }
        for (int e = std::min(m_lowest, o.m_lowest); e < order; ++e) {
            if (!(coeff(e) == o.coeff(e))) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const TruncSeries &a, const TruncSeries &b)
    {
        return a.m_var == b.m_var && a.m_prec == b.m_prec && a.agrees_to(b, a.m_prec);
    }

    TruncSeries operator-() const
    {
        TruncSeries r = *this;
        for (auto &c : r.m_coeffs) {
            c = -c;
        }
        return r;
    }

    friend TruncSeries operator+(const TruncSeries &a, const TruncSeries &b)
    {
        return combine(a, b, 1);
    }
    friend TruncSeries operator-(const TruncSeries &a, const TruncSeries &b)
    {
        return combine(a, b, -1);
    }

    friend TruncSeries operator*(const TruncSeries &a, const TruncSeries &b)
    {
        a.check_var(b);
        const int prec = std::min(a.m_prec + b.order(), b.m_prec + a.order());
        TruncSeries r(a.m_var, a.m_lowest + b.m_lowest, {}, prec);
        for (std::size_t i = 0; i < a.m_coeffs.size(); ++i) {
            if (is_zero(a.m_coeffs[i])) {
                continue;
            }
            const int ei = a.m_lowest + static_cast<int>(i);
            for (std::size_t j = 0; j < b.m_coeffs.size(); ++j) {
                const int e = ei + b.m_lowest + static_cast<int>(j);
                if (e >= prec) {
                    break;
                }
                if (e < r.m_lowest) {
                    continue;
                }
                auto &slot = r.m_coeffs[static_cast<std::size_t>(e - r.m_lowest)];
                slot = slot + a.m_coeffs[i] * b.m_coeffs[j];
            }
        }
        return r;
    }

    friend TruncSeries operator*(const R &c, const TruncSeries &a)
    {
        TruncSeries r = a;
        for (auto &x : r.m_coeffs) {
            x = c * x;
        }
        return r;
    }

    TruncSeries &operator+=(const TruncSeries &o)
    {
        return *this = *this + o;
    }
    TruncSeries &operator-=(const TruncSeries &o)
    {
        return *this = *this - o;
    }
    TruncSeries &operator*=(const TruncSeries &o)
    {
        return *this = *this * o;
    }

    std::string str() const
    {
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
            if (is_zero(m_coeffs[k])) {
                continue;
            }
            const int e = m_lowest + static_cast<int>(k);
            os << (first ? "" : " + ") << "(" << to_string(m_coeffs[k]) << ")";
            if (e != 0) {
                os << "*" << m_var << "^" << e;
            }
            first = false;
        }
        if (first) {
            os << "0";
        }
        os << " + O(" << m_var << "^" << m_prec << ")";
        return os.str();
    }

    friend std::ostream &operator<<(std::ostream &os, const TruncSeries &s)
    {
        return os << s.str();
    }

private:
    void check_var(const TruncSeries &o) const
    {
        if (m_var != o.m_var) {
            throw variable_mismatch(std::string("series variables differ: ") + m_var + " vs " + o.m_var);
        }
    }

    static TruncSeries combine(const TruncSeries &a, const TruncSeries &b, int sign)
    {
        a.check_var(b);
        const int prec = std::min(a.m_prec, b.m_prec);
        const int lo = std::min({a.m_lowest, b.m_lowest, prec});
        TruncSeries r(a.m_var, lo, {}, prec);
        for (int e = lo; e < prec; ++e) {
            const R x = a.coeff(e);
            const R y = b.coeff(e);
            r.m_coeffs[static_cast<std::size_t>(e - lo)] = sign > 0 ? R(x + y) : R(x - y);
        }
        return r;
    }

    char m_var;
    int m_lowest;
    int m_prec;
    std::vector<R> m_coeffs;
};

template <coefficient_ring R>
TruncSeries<R> invert(const TruncSeries<R> &a)
{
    const auto v = a.valuation();
    if (!v) {
        throw non_unit("cannot invert a series that is zero to precision");
    }
    const R lead = a.coeff(*v);
    if (!is_unit(lead)) {
        throw non_unit("leading coefficient " + to_string(lead) + " is not a unit");
    }
    const R lead_inv = unit_inverse(lead);
    // a = x^v * b with b(0) = lead; invert b to precision prec - v.
    const int n = a.prec() - *v;
    std::vector<R> b(static_cast<std::size_t>(n), R(0));
    for (int k = 0; k < n; ++k) {
        b[static_cast<std::size_t>(k)] = a.coeff(*v + k);
    }
    std::vector<R> inv(static_cast<std::size_t>(n), R(0));
    for (int k = 0; k < n; ++k) {
        R acc = k == 0 ? R(1) : R(0);
        for (int j = 1; j <= k; ++j) {
            acc = acc - b[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(k - j)];
        }
        inv[static_cast<std::size_t>(k)] = lead_inv * acc;
    }
    return TruncSeries<R>(a.variable(), -*v, std::move(inv), n - *v);
}

namespace detail
{

template <coefficient_ring R>
void require_nonnegative_support(const TruncSeries<R> &a, const char *what)
{
    for (int e = a.lowest(); e < std::min(0, a.prec()); ++e) {
        if (!is_zero(a.coeff(e))) {
            throw precondition_violation(std::string(what) + ": nonzero coefficient at negative exponent");
        }
    }
}

} // namespace detail

// exp(a) for a with valuation >= 1, via n b_n = sum_k k a_k b_{n-k}.
template <coefficient_ring R>
TruncSeries<R> exp(const TruncSeries<R> &a)
{
    detail::require_nonnegative_support(a, "exp");
    if (a.prec() > 0 && !is_zero(a.coeff(0))) {
        throw precondition_violation("exp requires valuation >= 1");
    }
    const int n = std::max(a.prec(), 0);
    std::vector<R> b(static_cast<std::size_t>(n), R(0));
    if (n > 0) {
        b[0] = R(1);
    }
    for (int k = 1; k < n; ++k) {
        R acc(0);
        for (int j = 1; j <= k; ++j) {
            acc = acc + R(static_cast<long>(j)) * a.coeff(j) * b[static_cast<std::size_t>(k - j)];
        }
        b[static_cast<std::size_t>(k)] = divide_integer(acc, k);
    }
    return TruncSeries<R>(a.variable(), 0, std::move(b), a.prec());
}

// log(a) for a with constant term 1, via n c_n = n a_n - sum_{k<n} k c_k a_{n-k}.
template <coefficient_ring R>
TruncSeries<R> log(const TruncSeries<R> &a)
{
    detail::require_nonnegative_support(a, "log");
    if (a.prec() <= 0 || !(a.coeff(0) == R(1))) {
        throw precondition_violation("log requires constant term 1");
    }
    const int n = a.prec();
    std::vector<R> c(static_cast<std::size_t>(n), R(0));
    for (int k = 1; k < n; ++k) {
        R acc = R(static_cast<long>(k)) * a.coeff(k);
        for (int j = 1; j < k; ++j) {
            acc = acc - R(static_cast<long>(j)) * c[static_cast<std::size_t>(j)] * a.coeff(k - j);
        }
        c[static_cast<std::size_t>(k)] = divide_integer(acc, k);
    }
    return TruncSeries<R>(a.variable(), 0, std::move(c), n);
}

template <coefficient_ring R>
struct ProductFactor {
    TruncSeries<R> series;
    // Declared lower bound on the valuation of (series - 1).
    int valuation_bound;
};

// Infinite product of factors f_i with val(f_i - 1) >= v_i, v_i nondecreasing and
// unbounded. The source returns nullopt when a finite family is exhausted. Factors
// are consumed only while v_i < prec.
template <coefficient_ring R, typename Source>
TruncSeries<R> product_family(char var, Source &&next_factor, int prec, std::size_t factor_limit = 4096)
{
    TruncSeries<R> acc = TruncSeries<R>::one(var, prec);
    int last_bound = 0;
    for (std::size_t i = 0;; ++i) {
        if (i >= factor_limit) {
            throw precision_unachievable("product_family: valuation bounds did not reach precision "
                                         + std::to_string(prec) + " within " + std::to_string(factor_limit)
                                         + " factors");
        }
        std::optional<ProductFactor<R>> f = next_factor(i);
        if (!f) {
            break;
        }
        if (f->valuation_bound < last_bound) {
            throw precondition_violation("product_family: valuation bounds must be nondecreasing");
        }
        last_bound = f->valuation_bound;
        if (f->valuation_bound >= prec) {
            break;
        }
        const TruncSeries<R> deviation = f->series - TruncSeries<R>::one(var, f->series.prec());
        if (deviation.order() < f->valuation_bound) {
            throw precondition_violation("product_family: factor " + std::to_string(i) + " has val(f - 1) = "
                                         + std::to_string(deviation.order()) + " below its declared bound "
                                         + std::to_string(f->valuation_bound));
        }
        acc = (acc * f->series).truncated(prec);
    }
    return acc;
}

} // namespace motivic

#endif

#ifndef MOTIVIC_LAURENT_Q_HPP
#define MOTIVIC_LAURENT_Q_HPP

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <motivic/errors.hpp>
#include <motivic/rational.hpp>

namespace motivic
{

// Laurent polynomial in the formal residue cardinality q with rational coefficients.
// Dense storage: m_coeffs[k] is the coefficient of q^(m_low + k). Both ends are
// trimmed, so the zero polynomial has no coefficients.
class LaurentQ
{
public:
    LaurentQ() = default;
    LaurentQ(long c) : LaurentQ(Rational(c)) {}
    LaurentQ(const Rational &c)
    {
        if (c != 0) {
            m_coeffs.push_back(c);
        }
    }

    static LaurentQ monomial(int exponent, const Rational &c = 1)
    {
        LaurentQ r(c);
        r.m_low = r.m_coeffs.empty() ? 0 : exponent;
        return r;
    }

    static LaurentQ q()
    {
        return monomial(1);
    }

    // Build from (exponent, coefficient) terms; repeated exponents are summed.
    static LaurentQ from_terms(const std::vector<std::pair<int, Rational>> &terms)
    {
        LaurentQ r;
        for (const auto &[e, c] : terms) {
            r += monomial(e, c);
        }
        return r;
    }

    bool is_zero() const noexcept
    {
        return m_coeffs.empty();
    }
    int min_exponent() const
    {
        return m_low;
    }
    int max_exponent() const
    {
        return m_low + static_cast<int>(m_coeffs.size()) - 1;
    }

    Rational coefficient(int e) const
    {
        if (m_coeffs.empty() || e < m_low || e > max_exponent()) {
            return 0;
        }
        return m_coeffs[static_cast<std::size_t>(e - m_low)];
    }

    // Nonzero terms in increasing exponent order.
    std::vector<std::pair<int, Rational>> terms() const
    {
        std::vector<std::pair<int, Rational>> out;
        for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
            if (m_coeffs[k] != 0) {
                out.emplace_back(m_low + static_cast<int>(k), m_coeffs[k]);
            }
        }
        return out;
    }

    bool is_constant() const
    {
        return m_coeffs.empty() || (m_coeffs.size() == 1 && m_low == 0);
    }

    bool has_integer_coefficients() const
    {
        return std::all_of(m_coeffs.begin(), m_coeffs.end(), [](const Rational &c) { return is_integer(c); });
    }

    bool is_polynomial() const
    {
        return m_coeffs.empty() || m_low >= 0;
    }

    // Specialize q -> q0.
    Rational evaluate(const Rational &q0) const
    {
        if (m_coeffs.empty()) {
            return 0;
        }
        if (q0 == 0 && m_low < 0) {
            throw non_unit("negative power of q evaluated at q = 0");
        }
        // Horner from the top, then rescale by q0^m_low.
        Rational acc = 0;
        for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
            acc = acc * q0 + *it;
        }
        Rational scale = 1;
        const Rational base = m_low >= 0 ? q0 : 1 / q0;
        for (int k = 0; k < std::abs(m_low); ++k) {
            scale *= base;
        }
        return acc * scale;
    }

    LaurentQ operator-() const
    {
        LaurentQ r = *this;
        for (auto &c : r.m_coeffs) {
            c = -c;
        }
        return r;
    }

    LaurentQ &operator+=(const LaurentQ &o)
    {
        add_scaled(o, 1);
        return *this;
    }
    LaurentQ &operator-=(const LaurentQ &o)
    {
        add_scaled(o, -1);
        return *this;
    }
    LaurentQ &operator*=(const LaurentQ &o)
    {
        *this = *this * o;
        return *this;
    }

    friend LaurentQ operator+(LaurentQ a, const LaurentQ &b)
    {
        a += b;
        return a;
    }
    friend LaurentQ operator-(LaurentQ a, const LaurentQ &b)
    {
        a -= b;
        return a;
    }
    friend LaurentQ operator*(const LaurentQ &a, const LaurentQ &b)
    {
        LaurentQ r;
        if (a.is_zero() || b.is_zero()) {
            return r;
        }
        r.m_low = a.m_low + b.m_low;
        r.m_coeffs.assign(a.m_coeffs.size() + b.m_coeffs.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.m_coeffs.size(); ++i) {
            if (a.m_coeffs[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.m_coeffs.size(); ++j) {
                r.m_coeffs[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
            }
        }
        r.trim();
        return r;
    }

    friend bool operator==(const LaurentQ &a, const LaurentQ &b)
    {
        return a.m_low == b.m_low && a.m_coeffs == b.m_coeffs;
    }

    // Human form, highest power first: "q^2 - 3*q + 1/2 + 2*q^-1".
    std::string str() const
    {
        if (m_coeffs.empty()) {
            return "0";
        }
        std::string out;
        for (std::size_t k = m_coeffs.size(); k-- > 0;) {
            const Rational &c = m_coeffs[k];
            if (c == 0) {
                continue;
            }
            const int e = m_low + static_cast<int>(k);
            const bool neg = c < 0;
            const Rational mag = neg ? Rational(-c) : c;
            if (out.empty()) {
                out += neg ? "-" : "";
            } else {
                out += neg ? " - " : " + ";
            }
            if (e == 0) {
                out += to_string(mag);
                continue;
            }
            if (mag != 1) {
                out += to_string(mag) + "*";
            }
            out += "q";
            if (e != 1) {
                out += "^" + std::to_string(e);
            }
        }
        return out;
    }

    friend std::ostream &operator<<(std::ostream &os, const LaurentQ &p)
    {
        return os << p.str();
    }

private:
    void add_scaled(const LaurentQ &o, int sign)
    {
        if (o.is_zero()) {
            return;
        }
        if (is_zero()) {
            *this = o;
            if (sign < 0) {
                *this = -*this;
            }
            return;
        }
        const int lo = std::min(m_low, o.m_low);
        const int hi = std::max(max_exponent(), o.max_exponent());
        std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1), Rational(0));
        for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
            c[static_cast<std::size_t>(m_low - lo) + k] = m_coeffs[k];
        }
        for (std::size_t k = 0; k < o.m_coeffs.size(); ++k) {
            auto &slot = c[static_cast<std::size_t>(o.m_low - lo) + k];
            slot += sign > 0 ? o.m_coeffs[k] : Rational(-o.m_coeffs[k]);
        }
        m_low = lo;
        m_coeffs = std::move(c);
        trim();
    }

    void trim()
    {
        while (!m_coeffs.empty() && m_coeffs.back() == 0) {
            m_coeffs.pop_back();
        }
        std::size_t lead = 0;
        while (lead < m_coeffs.size() && m_coeffs[lead] == 0) {
            ++lead;
        }
        if (lead == m_coeffs.size()) {
            m_coeffs.clear();
            m_low = 0;
            return;
        }
        m_coeffs.erase(m_coeffs.begin(), m_coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
        m_low += static_cast<int>(lead);
    }

    int m_low = 0;
    std::vector<Rational> m_coeffs;
};

inline bool is_zero(const LaurentQ &p)
{
    return p.is_zero();
}

// Units of Q[q, q^-1] are the nonzero monomials.
inline bool is_unit(const LaurentQ &p)
{
    return p.terms().size() == 1;
}

inline LaurentQ unit_inverse(const LaurentQ &p)
{
    const auto t = p.terms();
    if (t.size() != 1) {
        throw non_unit("Laurent polynomial " + p.str() + " is not a unit");
    }
    return LaurentQ::monomial(-t[0].first, 1 / t[0].second);
}

inline LaurentQ divide_integer(const LaurentQ &p, long k)
{
    if (k == 0) {
        throw non_unit("division by zero");
    }
    LaurentQ r;
    for (const auto &[e, c] : p.terms()) {
        r += LaurentQ::monomial(e, c / k);
    }
    return r;
}

inline std::string to_string(const LaurentQ &p)
{
    return p.str();
}

} // namespace motivic

#endif

#ifndef MOTIVIC_EXACT_SCALAR_HPP
#define MOTIVIC_EXACT_SCALAR_HPP

#include <ostream>
#include <string>
#include <variant>

#include <motivic/errors.hpp>
#include <motivic/laurent_q.hpp>
#include <motivic/rational.hpp>

namespace motivic
{

enum class CoefficientMode { numeric, symbolic };

inline const char *to_string(CoefficientMode m)
{
    return m == CoefficientMode::numeric ? "numeric" : "symbolic";
}

// Mode-tagged exact value: a rational number (numeric mode) or a Laurent
// polynomial in q (symbolic mode). Mixed-mode arithmetic is rejected.
class ExactScalar
{
public:
    ExactScalar() : m_value(Rational(0)) {}
    ExactScalar(long v) : m_value(Rational(v)) {}
    ExactScalar(Rational v) : m_value(std::move(v)) {}
    ExactScalar(LaurentQ v) : m_value(std::move(v)) {}

    CoefficientMode mode() const noexcept
    {
        return std::holds_alternative<Rational>(m_value) ? CoefficientMode::numeric : CoefficientMode::symbolic;
    }

    const Rational &as_rational() const
    {
        if (const auto *r = std::get_if<Rational>(&m_value)) {
            return *r;
        }
        throw mode_mismatch("expected a numeric (rational) scalar");
    }

    const LaurentQ &as_laurent() const
    {
        if (const auto *p = std::get_if<LaurentQ>(&m_value)) {
            return *p;
        }
        throw mode_mismatch("expected a symbolic (Laurent in q) scalar");
    }

    std::string str() const
    {
        return std::visit([](const auto &v) { return to_string(v); }, m_value);
    }

    friend ExactScalar operator+(const ExactScalar &a, const ExactScalar &b)
    {
        return binary(a, b, [](const auto &x, const auto &y) { return x + y; });
    }
    friend ExactScalar operator-(const ExactScalar &a, const ExactScalar &b)
    {
        return binary(a, b, [](const auto &x, const auto &y) { return x - y; });
    }
    friend ExactScalar operator*(const ExactScalar &a, const ExactScalar &b)
    {
        return binary(a, b, [](const auto &x, const auto &y) { return x * y; });
    }
    ExactScalar operator-() const
    {
        return std::visit([](const auto &v) { return ExactScalar(-v); }, m_value);
    }

    friend bool operator==(const ExactScalar &a, const ExactScalar &b)
    {
        return a.m_value == b.m_value;
    }

    const std::variant<Rational, LaurentQ> &value() const noexcept
    {
        return m_value;
    }

    friend std::ostream &operator<<(std::ostream &os, const ExactScalar &s)
    {
        return os << s.str();
    }

private:
    template <typename Op>
    static ExactScalar binary(const ExactScalar &a, const ExactScalar &b, Op op)
    {
        if (a.mode() != b.mode()) {
            throw mode_mismatch(std::string("cannot combine ") + to_string(a.mode()) + " and " + to_string(b.mode())
                                + " scalars");
        }
        if (a.mode() == CoefficientMode::numeric) {
            return ExactScalar(op(a.as_rational(), b.as_rational()));
        }
        return ExactScalar(op(a.as_laurent(), b.as_laurent()));
    }

    std::variant<Rational, LaurentQ> m_value;
};

inline bool is_zero(const ExactScalar &s)
{
    return std::visit([](const auto &v) { return is_zero(v); }, s.value());
}

inline bool is_unit(const ExactScalar &s)
{
    return std::visit([](const auto &v) { return is_unit(v); }, s.value());
}

inline ExactScalar unit_inverse(const ExactScalar &s)
{
    return std::visit([](const auto &v) { return ExactScalar(unit_inverse(v)); }, s.value());
}

inline ExactScalar divide_integer(const ExactScalar &s, long k)
{
    return std::visit([k](const auto &v) { return ExactScalar(divide_integer(v, k)); }, s.value());
}

inline std::string to_string(const ExactScalar &s)
{
    return s.str();
}

} // namespace motivic

#endif

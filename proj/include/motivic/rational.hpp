#ifndef MOTIVIC_RATIONAL_HPP
#define MOTIVIC_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include <motivic/errors.hpp>

namespace motivic
{

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

inline Integer numerator(const Rational &r)
{
    return boost::multiprecision::numerator(r);
}

inline Integer denominator(const Rational &r)
{
    return boost::multiprecision::denominator(r);
}

inline bool is_integer(const Rational &r)
{
    return denominator(r) == 1;
}

// Exact "p/q" (or "p" for integers) serialization.
inline std::string to_string(const Rational &r)
{
    return r.str();
}

inline std::string to_string(const Integer &z)
{
    return z.str();
}

inline Rational parse_rational(std::string_view s)
{
    // The string constructor neither reduces nor rejects a zero denominator.
    try {
        const std::string str(s);
        const auto slash = str.find('/');
        const Integer num(str.substr(0, slash));
        const Integer den(slash == std::string::npos ? std::string("1") : str.substr(slash + 1));
        if (den == 0) {
            throw precondition_violation("zero denominator");
        }
        return Rational(num, den);
    } catch (const std::exception &) {
        throw precondition_violation("not a rational number: '" + std::string(s) + "'");
    }
}

// Ring-concept hooks for Rational; declared before any template that calls them.
inline bool is_zero(const Rational &r)
{
    return r == 0;
}

inline bool is_unit(const Rational &r)
{
    return r != 0;
}

inline Rational unit_inverse(const Rational &r)
{
    if (r == 0) {
        throw non_unit("division by zero");
    }
    return 1 / r;
}

inline Rational divide_integer(const Rational &r, long k)
{
    if (k == 0) {
        throw non_unit("division by zero");
    }
    return r / k;
}

inline Integer ipow(Integer base, unsigned long e)
{
    Integer acc = 1;
    while (e != 0) {
        if (e & 1ul) {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    return acc;
}

} // namespace motivic

#endif

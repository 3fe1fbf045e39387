#ifndef MOTIVIC_RING_HPP
#define MOTIVIC_RING_HPP

#include <concepts>

#include <motivic/errors.hpp>
#include <motivic/laurent_q.hpp>
#include <motivic/rational.hpp>

namespace motivic
{

// Commutative coefficient ring with exact division by nonzero integers.
template <typename R>
concept coefficient_ring = std::regular<R> && std::constructible_from<R, long> && requires(const R &a, const R &b, long k) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { divide_integer(a, k) } -> std::convertible_to<R>;
    { is_zero(a) } -> std::same_as<bool>;
    { is_unit(a) } -> std::same_as<bool>;
    { unit_inverse(a) } -> std::convertible_to<R>;
};

// Integer power; negative exponents require a unit base.
template <coefficient_ring R>
R power(const R &base, long e)
{
    R b = e >= 0 ? base : unit_inverse(base);
    unsigned long k = e >= 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    R acc(1);
    while (k != 0) {
        if (k & 1ul) {
            acc = acc * b;
        }
        k >>= 1;
        if (k != 0) {
            b = b * b;
        }
    }
    return acc;
}

} // namespace motivic

#endif

#include <random>

#include <gtest/gtest.h>

#include <motivic/exact_scalar.hpp>
#include <motivic/laurent_q.hpp>
#include <motivic/trunc_series.hpp>

using namespace motivic;

namespace
{

using S = TruncSeries<Rational>;

S poly(std::vector<Rational> c, int prec, char var = 't')
{
    return S::polynomial(var, c, prec);
}

S geometric(int prec)
{
    return S('t', 0, std::vector<Rational>(static_cast<std::size_t>(prec), Rational(1)), prec);
}

S random_series(std::mt19937 &rng, int prec, int lowest = 0)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Rational> c;
    for (int e = lowest; e < prec; ++e) {
        c.emplace_back(num(rng), den(rng));
    }
    return S('t', lowest, std::move(c), prec);
}

} // namespace

TEST(Rational, LowestTermsAndParsing)
{
    const Rational r = parse_rational("-6/4");
    EXPECT_EQ(to_string(r), "-3/2");
    EXPECT_EQ(denominator(r), 2);
    EXPECT_TRUE(is_integer(parse_rational("10/5")));
    EXPECT_THROW(parse_rational("1/0"), std::exception);
}

TEST(LaurentQ, ArithmeticAndEvaluation)
{
    const LaurentQ q = LaurentQ::q();
    const LaurentQ p = q * q - LaurentQ(3) * q + LaurentQ(1);
    EXPECT_EQ(p.str(), "q^2 - 3*q + 1");
    EXPECT_EQ(p.evaluate(Rational(2)), Rational(-1));
    const LaurentQ inv = unit_inverse(q);
    EXPECT_EQ(inv * q, LaurentQ(1));
    EXPECT_EQ((inv + q).evaluate(Rational(2)), Rational(5, 2));
    EXPECT_TRUE(is_zero(p - p));
    EXPECT_FALSE(is_unit(q + LaurentQ(1)));
    EXPECT_THROW(unit_inverse(q + LaurentQ(1)), non_unit);
    EXPECT_EQ(divide_integer(LaurentQ(3) * q, 3), q);
}

TEST(ExactScalar, ModeMismatchIsRejected)
{
    const ExactScalar a(Rational(1, 2));
    const ExactScalar b(LaurentQ::q());
    EXPECT_EQ(a.mode(), CoefficientMode::numeric);
    EXPECT_EQ(b.mode(), CoefficientMode::symbolic);
    EXPECT_THROW(a + b, mode_mismatch);
    EXPECT_THROW(a.as_laurent(), mode_mismatch);
    EXPECT_EQ((a + a).as_rational(), Rational(1));
}

TEST(TruncSeries, DifferenceOfSquares)
{
    const S r = poly({1, 1}, 5) * poly({1, -1}, 5);
    EXPECT_EQ(r, poly({1, 0, -1}, 5));
    EXPECT_EQ(r.prec(), 5);
}

TEST(TruncSeries, GeometricSeriesIdentity)
{
    EXPECT_EQ(geometric(6) * poly({1, -1}, 6), S::one('t', 6));
}

TEST(TruncSeries, LaurentShift)
{
    const S uinv = S::monomial('u', -1, 1, 4);
    const S r = uinv * poly({0, 1, 1}, 4, 'u');
    EXPECT_EQ(r.truncated(2), poly({1, 1}, 2, 'u'));
    EXPECT_EQ(r.coeff(0), 1);
    EXPECT_EQ(r.coeff(1), 1);
    EXPECT_EQ(r.coeff(2), 0);
}

TEST(TruncSeries, NeverReportsPastPrecision)
{
    const S a = geometric(4);
    EXPECT_THROW(a.coeff(4), precondition_violation);
    EXPECT_EQ(static_cast<int>(a.coefficients().size()), a.prec() - a.lowest());
}

TEST(TruncSeries, VariableMismatch)
{
    EXPECT_THROW(poly({1}, 3, 't') + poly({1}, 3, 'u'), variable_mismatch);
    EXPECT_THROW(poly({1}, 3, 't') * poly({1}, 3, 'z'), variable_mismatch);
}

TEST(TruncSeries, InvertExamples)
{
    EXPECT_EQ(invert(poly({1, -1}, 4)), poly({1, 1, 1, 1}, 4));
    EXPECT_EQ(invert(poly({2}, 3)), poly({Rational(1, 2)}, 3));
    const S t = S::monomial('t', 1, 1, 3);
    const S ti = invert(t);
    EXPECT_EQ(ti.lowest(), -1);
    EXPECT_EQ(ti.coeff(-1), 1);
    EXPECT_THROW(invert(S('t', 3)), non_unit);
}

TEST(TruncSeries, InvertOverLaurentNeedsUnitLead)
{
    using L = TruncSeries<LaurentQ>;
    const L a = L::polynomial('u', {LaurentQ::q(), LaurentQ(1)}, 4);
    EXPECT_EQ((a * invert(a)).truncated(3), L::one('u', 3));
    const L bad = L::polynomial('u', {LaurentQ::q() + LaurentQ(1)}, 4);
    EXPECT_THROW(invert(bad), non_unit);
}

TEST(TruncSeries, ExpLogExamples)
{
    EXPECT_EQ(exp(poly({0, 1}, 4)), poly({1, 1, Rational(1, 2), Rational(1, 6)}, 4));
    EXPECT_EQ(log(invert(poly({1, -1}, 4))), poly({0, 1, Rational(1, 2), Rational(1, 3)}, 4));
    const S cube = exp(Rational(3) * log(invert(poly({1, -1}, 5))));
    EXPECT_EQ(cube.coeff(2), 6);
    const S direct = invert(poly({1, -1}, 5) * poly({1, -1}, 5) * poly({1, -1}, 5));
    EXPECT_EQ(cube, direct);
    EXPECT_THROW(exp(poly({1, 1}, 3)), precondition_violation);
    EXPECT_THROW(log(poly({2, 1}, 3)), precondition_violation);
}

TEST(TruncSeries, ProductFamilyDistinctParts)
{
    auto source = [](std::size_t k) -> std::optional<ProductFactor<Rational>> {
        const int i = static_cast<int>(k) + 1;
        TruncSeries<Rational> f = TruncSeries<Rational>::one('u', 5) + TruncSeries<Rational>::monomial('u', i, 1, 5);
        return ProductFactor<Rational>{f, i};
    };
    EXPECT_EQ(product_family<Rational>('u', source, 5), poly({1, 1, 1, 2, 2}, 5, 'u'));
}

TEST(TruncSeries, ProductFamilyEmptyAndPartitions)
{
    auto empty = [](std::size_t) -> std::optional<ProductFactor<Rational>> { return std::nullopt; };
    EXPECT_EQ(product_family<Rational>('u', empty, 3), S::one('u', 3));
    auto source = [](std::size_t k) -> std::optional<ProductFactor<Rational>> {
        const int i = static_cast<int>(k) + 1;
        const auto f = invert(TruncSeries<Rational>::one('u', 5) - TruncSeries<Rational>::monomial('u', i, 1, 5));
        return ProductFactor<Rational>{f, i};
    };
    EXPECT_EQ(product_family<Rational>('u', source, 5), poly({1, 1, 2, 3, 5}, 5, 'u'));
}

TEST(TruncSeries, ProductFamilyChecksBounds)
{
    auto liar = [](std::size_t k) -> std::optional<ProductFactor<Rational>> {
        return ProductFactor<Rational>{TruncSeries<Rational>::one('u', 5) + TruncSeries<Rational>::monomial('u', 1, 1, 5),
                                       static_cast<int>(k) + 2};
    };
    EXPECT_THROW(product_family<Rational>('u', liar, 5), precondition_violation);
    auto stuck = [](std::size_t) -> std::optional<ProductFactor<Rational>> {
        return ProductFactor<Rational>{TruncSeries<Rational>::one('u', 5), 1};
    };
    EXPECT_THROW(product_family<Rational>('u', stuck, 5, 64), precision_unachievable);
    auto decreasing = [](std::size_t k) -> std::optional<ProductFactor<Rational>> {
        return ProductFactor<Rational>{TruncSeries<Rational>::one('u', 5), k == 0 ? 3 : 1};
    };
    EXPECT_THROW(product_family<Rational>('u', decreasing, 5), precondition_violation);
}

TEST(TruncSeriesProperty, RingAxiomsOnRandomSeries)
{
    std::mt19937 rng(20261014);
    for (int trial = 0; trial < 60; ++trial) {
        const int prec = 3 + trial % 6;
        const S a = random_series(rng, prec);
        const S b = random_series(rng, prec);
        const S c = random_series(rng, prec);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, S('t', prec));
    }
}

TEST(TruncSeriesProperty, MultiplyPrecisionFollowsValuations)
{
    const S a = S::monomial('t', 2, 1, 6);                 // t^2 + O(t^6)
    const S b = poly({1, 1}, 4);                            // 1 + t + O(t^4)
    const S r = a * b;
    EXPECT_EQ(r.prec(), 6);                                 // min(6 + 0, 4 + 2)
    EXPECT_EQ(r.coeff(3), 1);
}

TEST(TruncSeriesProperty, InvertIsTwoSided)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        S a = random_series(rng, 7);
        if (is_zero(a.coeff(0))) {
            a = a + S::one('t', 7);
        }
        if (is_zero(a.coeff(0))) {
            continue;
        }
        EXPECT_EQ(a * invert(a), S::one('t', 7));
    }
}

TEST(TruncSeriesProperty, ExpLogInverse)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        S a = random_series(rng, 7);
        const S x = a - S::monomial('t', 0, a.coeff(0), 7); // valuation >= 1
        EXPECT_EQ(log(exp(x)), x);
        const S y = x + S::one('t', 7);
        EXPECT_EQ(exp(log(y)), y);
    }
}

TEST(TruncSeriesProperty, ProductOrderAndChunkingIndependent)
{
    std::mt19937 rng(5);
    std::vector<S> factors;
    for (int i = 1; i <= 6; ++i) {
        S f = random_series(rng, 8);
        std::vector<Rational> c(static_cast<std::size_t>(8), Rational(0));
        c[0] = 1;
        for (int e = i; e < 8; ++e) {
            c[static_cast<std::size_t>(e)] = f.coeff(e);
        }
        factors.emplace_back('t', 0, c, 8);
    }
    auto in_order = [&](std::vector<int> order) {
        auto src = [&, order](std::size_t k) -> std::optional<ProductFactor<Rational>> {
            if (k >= order.size()) {
                return std::nullopt;
            }
            return ProductFactor<Rational>{factors[static_cast<std::size_t>(order[k])], 1};
        };
        return product_family<Rational>('t', src, 8);
    };
    const S forward = in_order({0, 1, 2, 3, 4, 5});
    EXPECT_EQ(forward, in_order({5, 4, 3, 2, 1, 0}));
    EXPECT_EQ(forward, in_order({2, 0, 5, 1, 3, 4}));
    // chunked: multiply pairs first
    S chunked = S::one('t', 8);
    for (std::size_t i = 0; i < factors.size(); i += 2) {
        chunked = chunked * (factors[i] * factors[i + 1]).truncated(8);
    }
    EXPECT_EQ(forward, chunked.truncated(8));
}

TEST(TruncSeries, AdamsSubstitution)
{
    const S a = poly({1, 2, 3}, 3);
    const S r = a.substitute_power(2);
    EXPECT_EQ(r.prec(), 6);
    EXPECT_EQ(r, poly({1, 0, 2, 0, 3, 0}, 6));
    const S signed_r = a.substitute_power(2, [](int e) { return e % 2 ? -1 : 1; });
    EXPECT_EQ(signed_r.coeff(2), -2);
}

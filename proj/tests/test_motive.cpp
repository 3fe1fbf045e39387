#include <random>

#include <gtest/gtest.h>

#include <motivic/motive_expr.hpp>
#include <motivic/realization.hpp>

using namespace motivic;

namespace
{

using E = MotiveExpr;

E gerbe()
{
    return E::tensor({E::curve(), E::bgm()});
}

// Small random expression over the generators, depth-limited.
E random_expr(std::mt19937 &rng, int depth)
{
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 8 : 4);
    switch (pick(rng)) {
    case 0:
        return E::unit();
    case 1:
        return E::tate(std::uniform_int_distribution<int>(1, 2)(rng));
    case 2:
        return E::curve();
    case 3:
        return E::jacobian();
    case 4:
        return E::bgm();
    case 5:
        return E::sum({random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    case 6:
        return E::tensor({random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    case 7:
        return E::sym(std::uniform_int_distribution<int>(0, 2)(rng), random_expr(rng, depth - 1));
    default:
        return E::zeta(std::uniform_int_distribution<int>(1, 3)(rng));
    }
}

Integer binomial(int n, int k)
{
    if (k < 0 || k > n) {
        return 0;
    }
    Integer r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

} // namespace

TEST(Ev, Examples)
{
    const ScalarCountBackend p1q2(presets::numeric_p1(2));
    const ScalarCountBackend p1q3(presets::numeric_p1(3));
    EXPECT_EQ(ev(E::bgm(), p1q2), 2);
    // dim Sym^2 C = 2: the point count of P^2 over F_3 is q^2 ev.
    EXPECT_EQ(groupoid_count(E::sym(2, E::curve()), 2, p1q3), 13);
    EXPECT_EQ(ev(E::sym(2, E::curve()), p1q3), Rational(13, 9));
    EXPECT_EQ(ev(E::sym(2, gerbe()), p1q2), Rational(16, 3));
}

TEST(Ev, GroupoidCountExamples)
{
    EXPECT_EQ(groupoid_count(E::bgm(), -1, ScalarCountBackend(presets::numeric_p1(2))), 1);
    EXPECT_EQ(groupoid_count(E::tensor({E::jacobian(), E::bgm()}), -1, ScalarCountBackend(presets::numeric_p1(5))),
              Rational(1, 4));
    EXPECT_EQ(groupoid_count(E::sym(1, gerbe()), 0, ScalarCountBackend(presets::numeric_p1(2))), 3);
}

TEST(Ev, ExtensionDegree)
{
    const ScalarCountBackend b(presets::numeric_elliptic(2, 0));
    EXPECT_EQ(ev(E::curve(), b, 2), Rational(9, 4));
    EXPECT_EQ(ev(E::tate(1), b, 3), Rational(1, 8));
    EXPECT_THROW(ev(E::curve(), b, 0), precondition_violation);
}

TEST(Ev, ZetaFactorMatchesSymSum)
{
    // Z(C, Q{1}) = sum_j Sym^j C {j}; the closed form agrees with the partial sums.
    const ScalarCountBackend b(presets::numeric_elliptic(3, 1));
    const Evaluator<ScalarCountBackend> eval(b);
    const auto syms = eval.sym_powers(E::curve(), 40, 1);
    Rational partial = 0;
    for (int j = 0; j <= 40; ++j) {
        partial += syms[static_cast<std::size_t>(j)] * power(Rational(3), -j);
    }
    const Rational closed = ev(E::zeta(1), b);
    EXPECT_LT(abs(closed - partial), Rational(1, 1000000));
}

TEST(Betti, Examples)
{
    using S = TruncSeries<Rational>;
    EXPECT_EQ(betti(gerbe(), 0, 6), S::polynomial('z', {1, 0, 2, 0, 2, 0}, 6));
    EXPECT_EQ(betti(E::tensor({E::jacobian(), E::bgm()}), 2, 3), S::polynomial('z', {1, 4, 7}, 3));
    EXPECT_EQ(betti(E::tate(2), 1, 6).coeff(4), 1);
}

TEST(Betti, SymmetricPowerMatchesMacdonald)
{
    for (int g : {0, 1, 2}) {
        const int prec = 16;
        for (int j = 0; j <= 6; ++j) {
            const auto b = betti(E::sym(j, E::curve()), g, prec);
            for (int k = 0; k < prec; ++k) {
                // t^j z^k in (1 + zt)^{2g} / ((1 - t)(1 - z^2 t)): a from the numerator, c from 1/(1 - z^2 t).
                Integer expect = 0;
                for (int c = 0; 2 * c <= k; ++c) {
                    const int a = k - 2 * c;
                    if (a + c <= j) {
                        expect += binomial(2 * g, a);
                    }
                }
                EXPECT_EQ(b.coeff(k), Rational(expect)) << "g=" << g << " j=" << j << " k=" << k;
            }
        }
    }
}

TEST(Normalize, Examples)
{
    const E a = E::curve(), b = E::bgm(), c = E::jacobian();
    EXPECT_EQ(normalize(E::sum({E::sum({a, b}), c})), normalize(E::sum({a, b, c})));
    EXPECT_EQ(normalize(E::sum({E::sum({a, b}), c})).children().size(), 3u);
    EXPECT_EQ(normalize(E::tensor({a, E::unit()})), a);
    EXPECT_EQ(normalize(E::sym(0, E::sum({a, E::zeta(2)}))), E::unit());
    EXPECT_EQ(normalize(E::sym(1, b)), b);
    EXPECT_EQ(normalize(E::tensor({E::tate(1), a, E::tate(2)})), normalize(E::tensor({a, E::tate(3)})));
    EXPECT_EQ(normalize(E::tate(0)), E::unit());
    EXPECT_EQ(normalize(E::tensor({b, a})), normalize(E::tensor({a, b})));
}

TEST(Normalize, DomainErrors)
{
    EXPECT_THROW(E::zeta(0), divergent_zeta);
    EXPECT_THROW(E::zeta(-2), divergent_zeta);
    EXPECT_THROW(E::sym(-1, E::curve()), precondition_violation);
    EXPECT_THROW(E::tate(-1), precondition_violation);
    EXPECT_THROW(E::sum({}), precondition_violation);
    EXPECT_THROW(E::tensor({}), precondition_violation);
}

TEST(Plethysm, SymOfProjectiveLine)
{
    for (long q : {2L, 3L, 5L}) {
        const ScalarCountBackend b(presets::numeric_p1(q));
        for (int d = 0; d <= 6; ++d) {
            Rational expect = 0;
            for (int k = 0; k <= d; ++k) {
                expect += power(Rational(q), k);
            }
            EXPECT_EQ(groupoid_count(E::sym(d, E::curve()), d, b), expect) << "q=" << q << " d=" << d;
        }
    }
}

TEST(Plethysm, SymZeroAndOne)
{
    const ScalarCountBackend b(presets::numeric_elliptic(2, 1));
    EXPECT_EQ(ev(E::sym(0, E::jacobian()), b), 1);
    EXPECT_EQ(ev(E::sym(1, E::jacobian()), b), ev(E::jacobian(), b));
    EXPECT_EQ(betti(E::sym(1, E::curve()), 2, 5), betti(E::curve(), 2, 5));
}

TEST(PlethysmProperty, CauchyIdentity)
{
    std::mt19937 rng(42);
    const std::vector<E> gens{E::unit(), E::tate(1), E::curve(), E::jacobian(), E::bgm(), gerbe(), E::zeta(1)};
    const ScalarCountBackend num(presets::numeric_elliptic(3, -1));
    const GradedCountBackend<LaurentQ> graded(presets::symbolic_elliptic(2), 7);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    for (int trial = 0; trial < 12; ++trial) {
        const E a = gens[pick(rng)];
        const E b = gens[pick(rng)];
        for (int d = 0; d <= 5; ++d) {
            std::vector<E> terms;
            for (int i = 0; i <= d; ++i) {
                terms.push_back(E::tensor({E::sym(i, a), E::sym(d - i, b)}));
            }
            const E lhs = E::sym(d, E::sum({a, b}));
            const E rhs = E::sum(terms);
            EXPECT_EQ(ev(lhs, num), ev(rhs, num)) << to_string(a) << " | " << to_string(b) << " d=" << d;
            EXPECT_EQ(ev(lhs, num, 2), ev(rhs, num, 2));
            EXPECT_EQ(ev(lhs, graded), ev(rhs, graded));
            EXPECT_EQ(betti(lhs, 2, 8), betti(rhs, 2, 8));
        }
    }
}

TEST(RealizationProperty, MultiplicativeAndAdditive)
{
    std::mt19937 rng(2026);
    const ScalarCountBackend num(presets::numeric_p1(3));
    const GradedCountBackend<Rational> graded(presets::numeric_elliptic(2, 1), 6);
    for (int trial = 0; trial < 40; ++trial) {
        const E a = random_expr(rng, 2);
        const E b = random_expr(rng, 2);
        for (int n : {1, 2}) {
            EXPECT_EQ(ev(E::tensor({a, b}), num, n), ev(a, num, n) * ev(b, num, n));
            EXPECT_EQ(ev(E::sum({a, b}), num, n), ev(a, num, n) + ev(b, num, n));
        }
        EXPECT_EQ(ev(E::tensor({a, b}), graded), (ev(a, graded) * ev(b, graded)).truncated(6));
        EXPECT_EQ(ev(E::sum({a, b}), graded), ev(a, graded) + ev(b, graded));
        EXPECT_EQ(betti(E::tensor({a, b}), 1, 6), (betti(a, 1, 6) * betti(b, 1, 6)).truncated(6));
    }
}

TEST(NormalizeProperty, IdempotentAndRealizationInvariant)
{
    std::mt19937 rng(99);
    const ScalarCountBackend num(presets::numeric_elliptic(2, 0));
    for (int trial = 0; trial < 60; ++trial) {
        const E e = random_expr(rng, 3);
        const E n = normalize(e);
        EXPECT_EQ(normalize(n), n) << to_string(e);
        EXPECT_EQ(ev(e, num), ev(n, num)) << to_string(e);
        EXPECT_EQ(betti(e, 2, 6), betti(n, 2, 6)) << to_string(e);
    }
}

TEST(ModeConsistency, GradedSymbolicSpecializes)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const E e = random_expr(rng, 2);
        for (long q : {2L, 3L}) {
            const GradedCountBackend<LaurentQ> sym(presets::symbolic_elliptic(1), 6);
            const GradedCountBackend<Rational> num(presets::numeric_elliptic(q, 1), 6);
            EXPECT_EQ(specialize(ev(e, sym), q), ev(e, num)) << to_string(e) << " q=" << q;
        }
    }
}

TEST(ModeConsistency, GradedAgreesWithScalarOnFiniteMotives)
{
    // Without zeta factors the u-series is a polynomial whose value at u = 1 is ev.
    const ScalarCountBackend num(presets::numeric_elliptic(3, 2));
    const GradedCountBackend<Rational> graded(presets::numeric_elliptic(3, 2), 12);
    const E e = E::sum({E::sym(2, E::tensor({E::curve(), E::tate(1)})), E::tensor({E::jacobian(), E::tate(3)})});
    EXPECT_EQ(value_at_one(ev(e, graded)), ev(e, num));
}

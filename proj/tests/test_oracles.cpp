#include <gtest/gtest.h>

#include <motivic/moduli.hpp>
#include <motivic/oracles/centralizer.hpp>
#include <motivic/oracles/partition.hpp>
#include <motivic/oracles/splitting.hpp>
#include <motivic/oracles/torsion.hpp>

using namespace motivic;
using namespace motivic::oracles;

TEST(Partitions, EnumerationAndConjugate)
{
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 0; n <= 8; ++n) {
        const auto ps = partitions_of(n);
        EXPECT_EQ(ps.size(), counts[static_cast<std::size_t>(n)]);
        for (const auto &p : ps) {
            EXPECT_EQ(p.weight(), n);
            EXPECT_EQ(p.conjugate().conjugate(), p);
            EXPECT_EQ(p.conjugate().weight(), n);
        }
    }
    EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
    EXPECT_THROW(Partition({2, 0}), precondition_violation);
}

TEST(LocalAut, Examples)
{
    EXPECT_EQ(local_aut_order(Partition({1, 1}), 2), 6);
    EXPECT_EQ(local_aut_order(Partition({2}), 2), 2);
    EXPECT_EQ(local_aut_order(Partition({1}), 5), 4);
    EXPECT_EQ(local_aut_order(Partition({1, 1, 1}), 2), gl_order(3, Integer(2)));
}

TEST(LocalSeries, Examples)
{
    const auto s2 = local_torsion_series(2, 4);
    EXPECT_EQ(s2.coeff(0), 1);
    EXPECT_EQ(s2.coeff(1), 1);
    EXPECT_EQ(s2.coeff(2), Rational(2, 3));
    EXPECT_EQ(local_torsion_series(3, 3).coeff(2), Rational(3, 16));
    EXPECT_EQ(local_torsion_closed_form(3, 2), Rational(3, 16));
}

TEST(LocalSeries, ClosedFormAllSmallCases)
{
    for (long r : {2L, 3L, 4L, 5L}) {
        const auto s = local_torsion_series(r, 9);
        for (int d = 0; d <= 8; ++d) {
            EXPECT_EQ(s.coeff(d), local_torsion_closed_form(r, d)) << "r=" << r << " d=" << d;
        }
    }
}

TEST(TorsionOracle, Examples)
{
    EXPECT_EQ(torsion_count_bruteforce(presets::numeric_p1(2), 1), 3);
    EXPECT_EQ(torsion_count_bruteforce(presets::numeric_p1(2), 2), Rational(16, 3));
    EXPECT_EQ(torsion_count_bruteforce(presets::numeric_elliptic(2, 0), 1), 3);
    EXPECT_EQ(torsion_count_bruteforce(presets::numeric_p1(2), 0), 1);
}

TEST(TorsionOracle, AgreesWithMotivicCount)
{
    for (long q : {2L, 3L}) {
        for (const auto &c : {presets::numeric_p1(q), presets::numeric_elliptic(q, 0), presets::numeric_elliptic(q, 1)}) {
            const ScalarCountBackend b(c);
            for (int d = 0; d <= 5; ++d) {
                EXPECT_EQ(count(StackId::coh0(d), b, 0).value, torsion_count_bruteforce(c, d))
                    << c.label << " q=" << q << " d=" << d;
            }
        }
    }
}

TEST(SplittingOracle, AutOrders)
{
    EXPECT_EQ(splitting_aut_order(SplittingType({0, 0}), 2), 6);
    EXPECT_EQ(splitting_aut_order(SplittingType({-1, 1}), 2), 8);
    EXPECT_EQ(splitting_aut_order(SplittingType({0, 2}), 2), 8);
    EXPECT_EQ(splitting_aut_order(SplittingType({3}), 3), 2);
    EXPECT_THROW(SplittingType({}), precondition_violation);
}

TEST(SplittingOracle, TypeEnumeration)
{
    const auto t = splitting_types(2, 0, 4);
    EXPECT_EQ(t.size(), 3u); // (0,0), (-1,1), (-2,2)
    for (const auto &s : splitting_types(3, 1, 5)) {
        EXPECT_EQ(s.degree(), 1);
        EXPECT_LE(s.spread(), 5);
        EXPECT_EQ(s.rank(), 3);
    }
    EXPECT_TRUE(splitting_types(2, 0, -1).empty());
}

TEST(SplittingOracle, BunExamples)
{
    EXPECT_EQ(bun_p1_bruteforce(2, 0, 2, 0).partial_sum, Rational(1, 6));
    EXPECT_EQ(bun_p1_bruteforce(2, 0, 2, 4).partial_sum, Rational(31, 96));
    const auto one = bun_p1_bruteforce(1, 7, 3, 0);
    EXPECT_EQ(one.partial_sum, Rational(1, 2));
    EXPECT_EQ(one.tail_bound, 0);
    EXPECT_THROW(bun_p1_bruteforce(2, 0, 1, 3), precondition_violation);
}

TEST(SplittingOracle, BracketsContainClosedForm)
{
    for (int n : {2, 3}) {
        for (long q : {2L, 3L}) {
            const Rational exact = bun_closed_form(presets::numeric_p1(q), n);
            Rational prev = 0;
            for (int s = 0; s <= 12; ++s) {
                for (long d : {0L, 1L}) {
                    const auto b = bun_p1_bruteforce(n, d, q, s);
                    EXPECT_LE(b.partial_sum, exact) << "n=" << n << " q=" << q << " s=" << s << " d=" << d;
                    EXPECT_GE(b.partial_sum + b.tail_bound, exact) << "n=" << n << " q=" << q << " s=" << s << " d=" << d;
                }
                const auto b0 = bun_p1_bruteforce(n, 0, q, s);
                EXPECT_GE(b0.partial_sum, prev);
                prev = b0.partial_sum;
            }
        }
    }
}

TEST(CentralizerOracle, Examples)
{
    const auto c22 = centralizer_bruteforce(2, 2);
    EXPECT_EQ(c22.nilpotent_count, 4);
    ASSERT_EQ(c22.entries.size(), 2u);
    for (const auto &e : c22.entries) {
        if (e.jordan_type == Partition({1, 1})) {
            EXPECT_EQ(e.centralizer_order, 6);
            EXPECT_EQ(e.class_size, 1);
        } else {
            EXPECT_EQ(e.jordan_type, Partition({2}));
            EXPECT_EQ(e.centralizer_order, 2);
            EXPECT_EQ(e.class_size, 3);
        }
    }
    const auto c13 = centralizer_bruteforce(1, 3);
    EXPECT_EQ(c13.nilpotent_count, 1);
    ASSERT_EQ(c13.entries.size(), 1u);
    EXPECT_EQ(c13.entries[0].centralizer_order, 2);
    EXPECT_EQ(centralizer_bruteforce(3, 2).nilpotent_count, 64);
    EXPECT_THROW(centralizer_bruteforce(4, 2), precondition_violation);
    EXPECT_THROW(centralizer_bruteforce(2, 4), precondition_violation);
}

TEST(CentralizerOracle, HallAndOrbitStabilizer)
{
    for (int d = 1; d <= 3; ++d) {
        for (long q : {2L, 3L}) {
            const auto c = centralizer_bruteforce(d, q);
            EXPECT_EQ(Integer(c.nilpotent_count), ipow(Integer(q), static_cast<unsigned long>(d) * (d - 1)));
            EXPECT_EQ(c.entries.size(), partitions_of(d).size());
            for (const auto &e : c.entries) {
                EXPECT_EQ(Integer(e.centralizer_order), e.hall_order) << e.jordan_type.str();
                EXPECT_EQ(Integer(e.class_size) * Integer(e.centralizer_order), c.gl_order) << e.jordan_type.str();
            }
        }
    }
}

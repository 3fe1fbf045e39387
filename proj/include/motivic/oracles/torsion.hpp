#ifndef MOTIVIC_ORACLES_TORSION_HPP
#define MOTIVIC_ORACLES_TORSION_HPP

#include <vector>

#include <motivic/curve.hpp>
#include <motivic/oracles/partition.hpp>
#include <motivic/rational.hpp>
#include <motivic/trunc_series.hpp>

namespace motivic::oracles
{

// |GL_d(F_r)| = prod_{k=0}^{d-1} (r^d - r^k).
inline Integer gl_order(int d, const Integer &r)
{
    Integer acc = 1;
    const Integer rd = ipow(r, static_cast<unsigned long>(d));
    for (int k = 0; k < d; ++k) {
        acc *= rd - ipow(r, static_cast<unsigned long>(k));
    }
    return acc;
}

// Hall formula for the automorphism group of the torsion module of type lambda over a
// complete DVR with residue field of size r:
// |Aut| = r^{sum_j (lambda'_j)^2} prod_i phi_{m_i}(1/r), phi_m(x) = prod_{k=1}^m (1 - x^k).
inline Integer local_aut_order(const Partition &lambda, long r)
{
    if (r < 2) {
        throw precondition_violation("residue cardinality must be >= 2");
    }
    long exponent = 0;
    const Partition conj = lambda.conjugate();
    for (int c : conj.parts()) {
        exponent += static_cast<long>(c) * c;
    }
    Integer acc = 1;
    for (const auto &[part, m] : lambda.multiplicities()) {
        (void)part;
        exponent -= static_cast<long>(m) * (m + 1) / 2;
        for (int k = 1; k <= m; ++k) {
            acc *= ipow(Integer(r), static_cast<unsigned long>(k)) - 1;
        }
    }
    return acc * ipow(Integer(r), static_cast<unsigned long>(exponent));
}

// sum_d t^d sum_{lambda |- d} 1 / |Aut(lambda)|, to precision prec.
inline TruncSeries<Rational> local_torsion_series(long r, int prec)
{
    std::vector<Rational> c;
    for (int d = 0; d < prec; ++d) {
        Rational acc = 0;
        for (const auto &lambda : partitions_of(d)) {
            acc += Rational(1) / Rational(local_aut_order(lambda, r));
        }
        c.push_back(acc);
    }
    return TruncSeries<Rational>('t', 0, std::move(c), prec);
}

// Closed form r^{d(d-1)} / |GL_d(F_r)|: nilpotent d x d matrices divided by |GL_d|.
inline Rational local_torsion_closed_form(long r, int d)
{
    return Rational(ipow(Integer(r), static_cast<unsigned long>(d) * (d - 1))) / Rational(gl_order(d, Integer(r)));
}

// Groupoid count of degree-d torsion sheaves by points and partitions: the coefficient
// of t^d in prod_{e=1}^d (local series at r = q^e, t -> t^e)^{B_e}. Uses only series
// multiplication, never exp/log or the Sym machinery.
inline Rational torsion_count_bruteforce(const NumericCurve &curve, int d)
{
    validate(curve);
    const int prec = d + 1;
    TruncSeries<Rational> acc = TruncSeries<Rational>::one('t', prec);
    for (int e = 1; e <= d; ++e) {
        const Integer B = closed_points(curve, e);
        const long r = static_cast<long>(numerator(power(curve.q, e)));
        const auto local = local_torsion_series(r, d / e + 1).substitute_power(e).truncated(prec);
        TruncSeries<Rational> factor = TruncSeries<Rational>::one('t', prec);
        for (Integer k = 0; k < B; ++k) {
            factor = (factor * local).truncated(prec);
        }
        acc = (acc * factor).truncated(prec);
    }
    return acc.coeff(d);
}

} // namespace motivic::oracles

#endif

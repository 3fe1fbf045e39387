#ifndef MOTIVIC_ORACLES_SPLITTING_HPP
#define MOTIVIC_ORACLES_SPLITTING_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <motivic/errors.hpp>
#include <motivic/oracles/torsion.hpp>
#include <motivic/rational.hpp>

namespace motivic::oracles
{

// Grothendieck splitting type O(a_1) + ... + O(a_n) of a vector bundle on P^1.
class SplittingType
{
public:
    explicit SplittingType(std::vector<long> twists) : m_twists(std::move(twists))
    {
        if (m_twists.empty()) {
            throw precondition_violation("splitting type needs rank >= 1");
        }
        std::sort(m_twists.begin(), m_twists.end());
    }

    const std::vector<long> &twists() const noexcept
    {
        return m_twists;
    }
    int rank() const
    {
        return static_cast<int>(m_twists.size());
    }
    long degree() const
    {
        long d = 0;
        for (long a : m_twists) {
            d += a;
        }
        return d;
    }
    long spread() const
    {
        return m_twists.back() - m_twists.front();
    }
    std::map<long, int> multiplicities() const
    {
        std::map<long, int> m;
        for (long a : m_twists) {
            ++m[a];
        }
        return m;
    }

private:
    std::vector<long> m_twists;
};

// |Aut(+ O(a_i))| = prod_v |GL_{m_v}(F_q)| prod_{v < w} q^{m_v m_w (w - v + 1)}: the
// endomorphism algebra is block triangular with dim Hom(O(v), O(w)) = max(0, w - v + 1).
inline Integer splitting_aut_order(const SplittingType &type, long q)
{
    if (q < 2) {
        throw precondition_violation("q must be >= 2");
    }
    const auto mult = type.multiplicities();
    Integer acc = 1;
    unsigned long exponent = 0;
    for (auto v = mult.begin(); v != mult.end(); ++v) {
        acc *= gl_order(v->second, Integer(q));
        for (auto w = std::next(v); w != mult.end(); ++w) {
            exponent += static_cast<unsigned long>(v->second) * w->second * (w->first - v->first + 1);
        }
    }
    return acc * ipow(Integer(q), exponent);
}

// All splitting types of rank n, degree d and spread <= spread_max.
inline std::vector<SplittingType> splitting_types(int n, long d, int spread_max)
{
    std::vector<SplittingType> out;
    if (n < 1 || spread_max < 0) {
        return out;
    }
    // Offsets 0 = o_1 <= ... <= o_n <= spread_max from the minimal twist a:
    // n a + sum(o) = d fixes a.
    std::vector<long> offsets(static_cast<std::size_t>(n), 0);
    std::function<void(int, long, long)> rec = [&](int idx, long lo, long sum) {
        if (idx == n) {
            const long rest = d - sum;
            if (rest % n != 0) {
                return;
            }
            const long a = rest / n;
            std::vector<long> tw;
            for (long o : offsets) {
                tw.push_back(a + o);
            }
            out.emplace_back(std::move(tw));
            return;
        }
        for (long o = lo; o <= spread_max; ++o) {
            offsets[static_cast<std::size_t>(idx)] = o;
            rec(idx + 1, o, sum + o);
        }
    };
    rec(1, 0, 0);
    return out;
}

struct BunBruteforce {
    Rational partial_sum;
    // The omitted types contribute at most tail_bound, so the exact value lies in
    // [partial_sum, partial_sum + tail_bound].
    Rational tail_bound;
    std::size_t types_counted = 0;
};

// Upper bound on the contribution of all types with spread > spread_max:
// at most C(s + n - 2, n - 2) <= (s + 1)^{n-2} types have spread s, and each has
// |Aut| >= (q - 1)^n q^{(n-1)(s+1)} (every twist other than the extremes pairs with one
// of them across the full spread, the extreme pair contributes s + 1).
inline Rational splitting_tail_bound(int n, long q, int spread_max)
{
    if (n <= 1) {
        return 0;
    }
    const Rational rho = power(Rational(q), -static_cast<long>(n - 1));
    const Rational gl_floor = power(Rational(q - 1), n);
    auto term = [&](long s) {
        return power(Rational(s + 1), n - 2) * power(rho, s + 1) / gl_floor;
    };
    Rational acc = 0;
    long s = spread_max + 1;
    for (;; ++s) {
        const Rational ratio = power(Rational(s + 2, s + 1), n - 2) * rho;
        if (ratio <= Rational(1, 2)) {
            // term(s') decreases at least geometrically with this ratio from here on.
            acc += term(s) / (1 - ratio);
            break;
        }
        acc += term(s);
    }
    return acc;
}

// Partial groupoid count of Bun_{n,d}(P^1) over F_q from splitting types with
// spread <= spread_max, plus a rigorous bound on the omitted tail.
inline BunBruteforce bun_p1_bruteforce(int n, long d, long q, int spread_max)
{
    if (q < 2 || spread_max < 0) {
        throw precondition_violation("bun_p1_bruteforce needs q >= 2 and spread_max >= 0");
    }
    BunBruteforce out;
    for (const auto &t : splitting_types(n, d, spread_max)) {
        out.partial_sum += Rational(1) / Rational(splitting_aut_order(t, q));
        ++out.types_counted;
    }
    out.tail_bound = splitting_tail_bound(n, q, spread_max);
    return out;
}

} // namespace motivic::oracles

#endif

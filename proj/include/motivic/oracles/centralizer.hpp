#ifndef MOTIVIC_ORACLES_CENTRALIZER_HPP
#define MOTIVIC_ORACLES_CENTRALIZER_HPP

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include <motivic/errors.hpp>
#include <motivic/oracles/partition.hpp>
#include <motivic/oracles/torsion.hpp>

namespace motivic::oracles
{

namespace detail
{

constexpr int max_dim = 3;

struct SmallMatrix {
    int d = 0;
    std::array<int, max_dim * max_dim> a{};

    int &at(int i, int j)
    {
        return a[static_cast<std::size_t>(i * max_dim + j)];
    }
    int at(int i, int j) const
    {
        return a[static_cast<std::size_t>(i * max_dim + j)];
    }
};

inline SmallMatrix decode(long code, int d, int p)
{
    SmallMatrix m;
    m.d = d;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            m.at(i, j) = static_cast<int>(code % p);
            code /= p;
        }
    }
    return m;
}

inline SmallMatrix multiply(const SmallMatrix &x, const SmallMatrix &y, int p)
{
    SmallMatrix r;
    r.d = x.d;
    for (int i = 0; i < x.d; ++i) {
        for (int j = 0; j < x.d; ++j) {
            int s = 0;
            for (int k = 0; k < x.d; ++k) {
                s += x.at(i, k) * y.at(k, j);
            }
            r.at(i, j) = s % p;
        }
    }
    return r;
}

inline bool equal(const SmallMatrix &x, const SmallMatrix &y)
{
    for (int i = 0; i < x.d; ++i) {
        for (int j = 0; j < x.d; ++j) {
            if (x.at(i, j) != y.at(i, j)) {
                return false;
            }
        }
    }
    return true;
}

inline int modinv(int a, int p)
{
    for (int x = 1; x < p; ++x) {
        if ((a * x) % p == 1) {
            return x;
        }
    }
    throw non_unit("no inverse mod p");
}

inline int rank(SmallMatrix m, int p)
{
    int r = 0;
    for (int col = 0; col < m.d && r < m.d; ++col) {
        int piv = -1;
        for (int i = r; i < m.d; ++i) {
            if (m.at(i, col) != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) {
            continue;
        }
        for (int j = 0; j < m.d; ++j) {
            std::swap(m.at(r, j), m.at(piv, j));
        }
        const int inv = modinv(m.at(r, col), p);
        for (int i = 0; i < m.d; ++i) {
            if (i == r || m.at(i, col) == 0) {
                continue;
            }
            const int f = (m.at(i, col) * inv) % p;
            for (int j = 0; j < m.d; ++j) {
                m.at(i, j) = ((m.at(i, j) - f * m.at(r, j)) % p + p) % p;
            }
        }
        ++r;
    }
    return r;
}

inline bool is_prime(long p)
{
    if (p < 2) {
        return false;
    }
    for (long k = 2; k * k <= p; ++k) {
        if (p % k == 0) {
            return false;
        }
    }
    return true;
}

} // namespace detail

struct CentralizerEntry {
    Partition jordan_type;
    long class_size = 0;         // nilpotent matrices of this Jordan type
    long centralizer_order = 0;  // invertible matrices commuting with a representative
    Integer hall_order;          // local_aut_order(jordan_type, q)
};

struct CentralizerCensus {
    int d = 0;
    long q = 0;
    long nilpotent_count = 0;
    Integer gl_order;
    std::vector<CentralizerEntry> entries;
};

// Enumerate every d x d matrix over F_q (q prime, d <= 3): collect the nilpotent ones,
// classify them by Jordan type from the ranks of their powers, and count the
// centralizer of one representative per type by direct enumeration.
inline CentralizerCensus centralizer_bruteforce(int d, long q)
{
    if (d < 1 || d > detail::max_dim) {
        throw precondition_violation("centralizer_bruteforce supports 1 <= d <= 3");
    }
    if (!detail::is_prime(q) || q > 5) {
        throw precondition_violation("centralizer_bruteforce supports prime q <= 5");
    }
    const int p = static_cast<int>(q);
    long total = 1;
    for (int k = 0; k < d * d; ++k) {
        total *= p;
    }
    std::vector<detail::SmallMatrix> all;
    all.reserve(static_cast<std::size_t>(total));
    for (long code = 0; code < total; ++code) {
        all.push_back(detail::decode(code, d, p));
    }

    CentralizerCensus out;
    out.d = d;
    out.q = q;
    out.gl_order = gl_order(d, Integer(q));
    std::map<Partition, std::pair<long, detail::SmallMatrix>> classes;
    for (const auto &m : all) {
        // ranks of N^0 .. N^d; N nilpotent iff rank(N^d) = 0
        std::vector<int> ranks{d};
        detail::SmallMatrix pw = m;
        for (int k = 1; k <= d; ++k) {
            ranks.push_back(detail::rank(pw, p));
            pw = detail::multiply(pw, m, p);
        }
        if (ranks.back() != 0) {
            continue;
        }
        ++out.nilpotent_count;
        // #blocks of size >= k is rank(N^{k-1}) - rank(N^k): the conjugate partition.
        std::vector<int> conj;
        for (int k = 1; k <= d; ++k) {
            const int c = ranks[static_cast<std::size_t>(k - 1)] - ranks[static_cast<std::size_t>(k)];
            if (c > 0) {
                conj.push_back(c);
            }
        }
        const Partition type = Partition(conj).conjugate();
        auto [it, inserted] = classes.try_emplace(type, 0, m);
        ++it->second.first;
    }
    for (const auto &[type, entry] : classes) {
        const auto &rep = entry.second;
        long cent = 0;
        for (const auto &x : all) {
            if (detail::rank(x, p) == d && detail::equal(detail::multiply(x, rep, p), detail::multiply(rep, x, p))) {
                ++cent;
            }
        }
        out.entries.push_back({type, entry.first, cent, local_aut_order(type, q)});
    }
    return out;
}

} // namespace motivic::oracles

#endif

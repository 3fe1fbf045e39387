#ifndef MOTIVIC_ORACLES_PARTITION_HPP
#define MOTIVIC_ORACLES_PARTITION_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <motivic/errors.hpp>

namespace motivic::oracles
{

// Integer partition with weakly decreasing positive parts.
class Partition
{
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : m_parts(std::move(parts))
    {
        std::sort(m_parts.begin(), m_parts.end(), std::greater<>());
        if (!m_parts.empty() && m_parts.back() <= 0) {
            throw precondition_violation("partition parts must be positive");
        }
    }

    const std::vector<int> &parts() const noexcept
    {
        return m_parts;
    }

    int weight() const
    {
        return std::accumulate(m_parts.begin(), m_parts.end(), 0);
    }

    Partition conjugate() const
    {
        std::vector<int> c(m_parts.empty() ? 0 : static_cast<std::size_t>(m_parts.front()), 0);
        for (int p : m_parts) {
            for (int j = 0; j < p; ++j) {
                ++c[static_cast<std::size_t>(j)];
            }
        }
        return Partition(std::move(c));
    }

    // part size -> multiplicity
    std::map<int, int> multiplicities() const
    {
        std::map<int, int> m;
        for (int p : m_parts) {
            ++m[p];
        }
        return m;
    }

    std::string str() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < m_parts.size(); ++i) {
            s += (i ? "," : "") + std::to_string(m_parts[i]);
        }
        return s + ")";
    }

    friend auto operator<=>(const Partition &, const Partition &) = default;

private:
    std::vector<int> m_parts;
};

// All partitions of n, in reverse lexicographic order ((n) first).
inline std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    if (n < 0) {
        return out;
    }
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

} // namespace motivic::oracles

#endif

#ifndef MOTIVIC_MOTIVE_EXPR_HPP
#define MOTIVIC_MOTIVE_EXPR_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <motivic/errors.hpp>

namespace motivic
{

enum class MotiveKind { unit, tate, curve, jacobian, bgm, sum, tensor, sym, zeta };

// Immutable expression over the generators Unit, Tate(i), CurveM, JacM, BGm and the
// operators Sum, Tensor, Sym(d, -), ZetaFactor(i). Nodes are shared; copying is cheap.
class MotiveExpr
{
public:
    static MotiveExpr unit()
    {
        return MotiveExpr(MotiveKind::unit, 0, {});
    }
    static MotiveExpr tate(int i)
    {
        if (i < 0) {
            throw precondition_violation("Tate twist index must be >= 0");
        }
        return MotiveExpr(MotiveKind::tate, i, {});
    }
    static MotiveExpr lefschetz()
    {
        return tate(1);
    }
    static MotiveExpr curve()
    {
        return MotiveExpr(MotiveKind::curve, 0, {});
    }
    static MotiveExpr jacobian()
    {
        return MotiveExpr(MotiveKind::jacobian, 0, {});
    }
    static MotiveExpr bgm()
    {
        return MotiveExpr(MotiveKind::bgm, 0, {});
    }
    static MotiveExpr sum(std::vector<MotiveExpr> terms)
    {
        if (terms.empty()) {
            throw precondition_violation("Sum needs at least one term");
        }
        return MotiveExpr(MotiveKind::sum, 0, std::move(terms));
    }
    static MotiveExpr tensor(std::vector<MotiveExpr> factors)
    {
        if (factors.empty()) {
            throw precondition_violation("Tensor needs at least one factor");
        }
        return MotiveExpr(MotiveKind::tensor, 0, std::move(factors));
    }
    static MotiveExpr sym(int d, MotiveExpr e)
    {
        if (d < 0) {
            throw precondition_violation("Sym degree must be >= 0, got " + std::to_string(d));
        }
        return MotiveExpr(MotiveKind::sym, d, {std::move(e)});
    }
    // Z(C, Q{i}) = sum_j M(Sym^j C){ij}; i = 0 diverges.
    static MotiveExpr zeta(int i)
    {
        if (i < 1) {
            throw divergent_zeta("Zeta(" + std::to_string(i) + ") diverges: the motivic zeta factor needs i >= 1");
        }
        return MotiveExpr(MotiveKind::zeta, i, {});
    }

    MotiveKind kind() const noexcept
    {
        return m_node->kind;
    }
    // Tate index, Sym degree, or zeta index; 0 otherwise.
    int index() const noexcept
    {
        return m_node->index;
    }
    const std::vector<MotiveExpr> &children() const noexcept
    {
        return m_node->children;
    }
    const MotiveExpr &child() const
    {
        return m_node->children.at(0);
    }

    friend std::strong_ordering operator<=>(const MotiveExpr &a, const MotiveExpr &b)
    {
        if (a.m_node == b.m_node) {
            return std::strong_ordering::equal;
        }
        if (auto c = a.kind() <=> b.kind(); c != 0) {
            return c;
        }
        if (auto c = a.index() <=> b.index(); c != 0) {
            return c;
        }
        const auto &x = a.children();
        const auto &y = b.children();
        return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
    }
    friend bool operator==(const MotiveExpr &a, const MotiveExpr &b)
    {
        return (a <=> b) == 0;
    }

private:
    struct Node {
        MotiveKind kind;
        int index;
        std::vector<MotiveExpr> children;
    };

    MotiveExpr(MotiveKind k, int index, std::vector<MotiveExpr> children)
        : m_node(std::make_shared<const Node>(Node{k, index, std::move(children)}))
    {
    }

    std::shared_ptr<const Node> m_node;
};

// Flatten nested Sum/Tensor, apply unit laws (Tensor(x, 1) = x, Sym^0 = 1, Sym^1 = id,
// Q{0} = 1), merge Tate twists inside a Tensor, and sort children canonically.
inline MotiveExpr normalize(const MotiveExpr &e)
{
    switch (e.kind()) {
    case MotiveKind::unit:
    case MotiveKind::curve:
    case MotiveKind::jacobian:
    case MotiveKind::bgm:
    case MotiveKind::zeta:
        return e;
    case MotiveKind::tate:
        return e.index() == 0 ? MotiveExpr::unit() : e;
    case MotiveKind::sym: {
        if (e.index() == 0) {
            return MotiveExpr::unit();
        }
        MotiveExpr inner = normalize(e.child());
        if (e.index() == 1) {
            return inner;
        }
        if (inner.kind() == MotiveKind::unit) {
            return inner;
        }
        return MotiveExpr::sym(e.index(), inner);
    }
    case MotiveKind::sum: {
        std::vector<MotiveExpr> out;
        for (const auto &c : e.children()) {
            MotiveExpr n = normalize(c);
            if (n.kind() == MotiveKind::sum) {
                out.insert(out.end(), n.children().begin(), n.children().end());
            } else {
                out.push_back(n);
            }
        }
        std::sort(out.begin(), out.end());
        return out.size() == 1 ? out.front() : MotiveExpr::sum(std::move(out));
    }
    case MotiveKind::tensor: {
        std::vector<MotiveExpr> out;
        int twist = 0;
        auto absorb = [&](const MotiveExpr &n) {
            if (n.kind() == MotiveKind::unit) {
                return;
            }
            if (n.kind() == MotiveKind::tate) {
                twist += n.index();
                return;
            }
            out.push_back(n);
        };
        for (const auto &c : e.children()) {
            MotiveExpr n = normalize(c);
            if (n.kind() == MotiveKind::tensor) {
                for (const auto &g : n.children()) {
                    absorb(g);
                }
            } else {
                absorb(n);
            }
        }
        if (twist > 0) {
            out.push_back(MotiveExpr::tate(twist));
        }
        if (out.empty()) {
            return MotiveExpr::unit();
        }
        std::sort(out.begin(), out.end());
        return out.size() == 1 ? out.front() : MotiveExpr::tensor(std::move(out));
    }
    }
    return e;
}

namespace detail
{

inline std::string print_expr(const MotiveExpr &e, int parent_precedence)
{
    // precedence: sum 1, tensor 2, atoms 3
    switch (e.kind()) {
    case MotiveKind::unit:
        return "1";
    case MotiveKind::tate:
        return e.index() == 1 ? "L" : "T(" + std::to_string(e.index()) + ")";
    case MotiveKind::curve:
        return "C";
    case MotiveKind::jacobian:
        return "Jac";
    case MotiveKind::bgm:
        return "BGm";
    case MotiveKind::zeta:
        return "Zeta(" + std::to_string(e.index()) + ")";
    case MotiveKind::sym:
        return "Sym(" + std::to_string(e.index()) + ", " + print_expr(e.child(), 0) + ")";
    case MotiveKind::sum:
    case MotiveKind::tensor: {
        const bool is_sum = e.kind() == MotiveKind::sum;
        const int prec = is_sum ? 1 : 2;
        std::string out;
        for (std::size_t i = 0; i < e.children().size(); ++i) {
            if (i > 0) {
                out += is_sum ? " + " : " * ";
            }
            out += print_expr(e.children()[i], prec + (is_sum ? 0 : 1));
        }
        return prec < parent_precedence ? "(" + out + ")" : out;
    }
    }
    return "?";
}

} // namespace detail

// Surface syntax accepted by parse_expr.
inline std::string to_string(const MotiveExpr &e)
{
    return detail::print_expr(e, 0);
}

} // namespace motivic

#endif

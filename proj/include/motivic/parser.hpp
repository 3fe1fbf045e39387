#ifndef MOTIVIC_PARSER_HPP
#define MOTIVIC_PARSER_HPP

#include <cctype>
#include <climits>
#include <string>
#include <string_view>
#include <vector>

#include <motivic/errors.hpp>
#include <motivic/motive_expr.hpp>

namespace motivic
{

// Grammar (precedence ^ > * > +):
//   sum   := prod ('+' prod)*
//   prod  := power ('*' power)*
//   power := atom ('^' INT)*
//   atom  := '1' | 'L' | 'C' | 'Jac' | 'BGm' | 'T(' INT ')' | 'Zeta(' INT ')'
//          | 'Sym(' INT ',' sum ')' | '(' sum ')'
// Positions in diagnostics are 0-based byte offsets into the source.
class ExprParser
{
public:
    explicit ExprParser(std::string_view src) : m_src(src) {}

    MotiveExpr parse()
    {
        MotiveExpr e = parse_sum();
        skip_ws();
        if (m_pos != m_src.size()) {
            fail("unexpected '" + std::string(1, m_src[m_pos]) + "'");
        }
        return normalize(e);
    }

private:
    [[noreturn]] void fail(const std::string &msg) const
    {
        throw parse_error(msg, m_pos);
    }

    void skip_ws()
    {
        while (m_pos < m_src.size() && std::isspace(static_cast<unsigned char>(m_src[m_pos]))) {
            ++m_pos;
        }
    }

    bool peek(char c)
    {
        skip_ws();
        return m_pos < m_src.size() && m_src[m_pos] == c;
    }

    void expect(char c)
    {
        if (!peek(c)) {
            fail(std::string("expected '") + c + "'");
        }
        ++m_pos;
    }

    long parse_int()
    {
        skip_ws();
        const std::size_t start = m_pos;
        bool negative = false;
        if (m_pos < m_src.size() && (m_src[m_pos] == '-' || m_src[m_pos] == '+')) {
            negative = m_src[m_pos] == '-';
            ++m_pos;
        }
        if (m_pos >= m_src.size() || !std::isdigit(static_cast<unsigned char>(m_src[m_pos]))) {
            m_pos = start;
            fail("expected integer");
        }
        long v = 0;
        while (m_pos < m_src.size() && std::isdigit(static_cast<unsigned char>(m_src[m_pos]))) {
            v = v * 10 + (m_src[m_pos] - '0');
            if (v > INT_MAX) {
                m_pos = start;
                fail("integer out of range");
            }
            ++m_pos;
        }
        return negative ? -v : v;
    }

    std::string parse_word()
    {
        const std::size_t start = m_pos;
        while (m_pos < m_src.size() && std::isalpha(static_cast<unsigned char>(m_src[m_pos]))) {
            ++m_pos;
        }
        return std::string(m_src.substr(start, m_pos - start));
    }

    MotiveExpr parse_sum()
    {
        std::vector<MotiveExpr> terms{parse_prod()};
        while (peek('+')) {
            ++m_pos;
            terms.push_back(parse_prod());
        }
        return terms.size() == 1 ? terms.front() : MotiveExpr::sum(std::move(terms));
    }

    MotiveExpr parse_prod()
    {
        std::vector<MotiveExpr> factors{parse_power()};
        while (peek('*')) {
            ++m_pos;
            factors.push_back(parse_power());
        }
        return factors.size() == 1 ? factors.front() : MotiveExpr::tensor(std::move(factors));
    }

    MotiveExpr parse_power()
    {
        MotiveExpr base = parse_atom();
        while (peek('^')) {
            ++m_pos;
            const std::size_t at = m_pos;
            const long k = parse_int();
            if (k < 0) {
                m_pos = at;
                fail("negative tensor power");
            }
            if (k > 4096) {
                m_pos = at;
                fail("tensor power too large");
            }
            base = k == 0 ? MotiveExpr::unit()
                          : MotiveExpr::tensor(std::vector<MotiveExpr>(static_cast<std::size_t>(k), base));
        }
        return base;
    }

    MotiveExpr parse_atom()
    {
        skip_ws();
        if (m_pos >= m_src.size()) {
            fail("unexpected end of expression");
        }
        const std::size_t start = m_pos;
        const char c = m_src[m_pos];
        if (c == '(') {
            ++m_pos;
            MotiveExpr inner = parse_sum();
            expect(')');
            return inner;
        }
        if (c == '1') {
            ++m_pos;
            if (m_pos < m_src.size() && std::isdigit(static_cast<unsigned char>(m_src[m_pos]))) {
                m_pos = start;
                fail("only the literal 1 is an atom");
            }
            return MotiveExpr::unit();
        }
        if (!std::isalpha(static_cast<unsigned char>(c))) {
            fail("unexpected '" + std::string(1, c) + "'");
        }
        const std::string word = parse_word();
        if (word == "L") {
            return MotiveExpr::lefschetz();
        }
        if (word == "C") {
            return MotiveExpr::curve();
        }
        if (word == "Jac") {
            return MotiveExpr::jacobian();
        }
        if (word == "BGm") {
            return MotiveExpr::bgm();
        }
        if (word == "T") {
            expect('(');
            const std::size_t at = (skip_ws(), m_pos);
            const long i = parse_int();
            if (i < 0) {
                m_pos = at;
                fail("Tate twist index must be >= 0");
            }
            expect(')');
            return MotiveExpr::tate(static_cast<int>(i));
        }
        if (word == "Zeta") {
            expect('(');
            const std::size_t at = (skip_ws(), m_pos);
            const long i = parse_int();
            if (i <= 0) {
                throw divergent_zeta("Zeta(" + std::to_string(i) + ") at position " + std::to_string(at)
                                     + " is divergent: zeta factors need index >= 1");
            }
            expect(')');
            return MotiveExpr::zeta(static_cast<int>(i));
        }
        if (word == "Sym") {
            expect('(');
            const std::size_t at = (skip_ws(), m_pos);
            const long d = parse_int();
            if (d < 0) {
                m_pos = at;
                fail("negative Sym degree " + std::to_string(d));
            }
            expect(',');
            MotiveExpr inner = parse_sum();
            expect(')');
            return MotiveExpr::sym(static_cast<int>(d), inner);
        }
        m_pos = start;
        fail("unknown atom '" + word + "'");
    }

    std::string_view m_src;
    std::size_t m_pos = 0;
};

// Parse and normalize. parse_expr(to_string(e)) == normalize(e).
inline MotiveExpr parse_expr(std::string_view src)
{
    return ExprParser(src).parse();
}

} // namespace motivic

#endif

#ifndef MOTIVIC_TESTS_CORPUS_HPP
#define MOTIVIC_TESTS_CORPUS_HPP

#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <motivic/motive_expr.hpp>
#include <motivic/parser.hpp>

namespace corpus
{

inline std::vector<std::string> load_expressions(const std::string &path)
{
    std::ifstream in(path);
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line[0] != '#') {
            out.push_back(line);
        }
    }
    return out;
}

// Builder-made expressions, deliberately not normalized.
inline motivic::MotiveExpr random_builder_expr(std::mt19937 &rng, int depth)
{
    using E = motivic::MotiveExpr;
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 9 : 5);
    auto sub = [&] { return random_builder_expr(rng, depth - 1); };
    switch (pick(rng)) {
    case 0:
        return E::unit();
    case 1:
        return E::tate(std::uniform_int_distribution<int>(0, 3)(rng));
    case 2:
        return E::curve();
    case 3:
        return E::jacobian();
    case 4:
        return E::bgm();
    case 5:
        return E::zeta(std::uniform_int_distribution<int>(1, 4)(rng));
    case 6:
        return E::sum({sub(), sub(), sub()});
    case 7:
        return E::tensor({sub(), sub()});
    case 8:
        return E::tensor({sub()});
    default:
        return E::sym(std::uniform_int_distribution<int>(0, 3)(rng), sub());
    }
}

// parse(print(e)) == normalize(e) for builder input; printing a parsed value is a fixed point.
inline bool round_trips(const motivic::MotiveExpr &e)
{
    const auto n = motivic::normalize(e);
    return motivic::parse_expr(motivic::to_string(e)) == n && motivic::parse_expr(motivic::to_string(n)) == n;
}

inline bool round_trips(const std::string &src)
{
    const auto e = motivic::parse_expr(src);
    return motivic::parse_expr(motivic::to_string(e)) == e && motivic::to_string(motivic::parse_expr(motivic::to_string(e))) == motivic::to_string(e);
}

} // namespace corpus

#endif

#ifndef MOTIVIC_CURVE_IO_HPP
#define MOTIVIC_CURVE_IO_HPP

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <motivic/curve.hpp>
#include <motivic/errors.hpp>
#include <motivic/laurent_q.hpp>

namespace motivic
{

// Mode-independent description of a curve: numerator coefficients as integer
// polynomials in q, optionally pinned to one integer q (data files with `q = <int>`).
struct CurveSpec {
    std::string descriptor; // what the user passed: p1, elliptic:<a>, or a path
    std::string label = "custom";
    int genus = 0;
    std::vector<LaurentQ> numerator{LaurentQ(1)};
    std::optional<long> fixed_q;
    std::optional<long> elliptic_trace; // set for the elliptic preset (Hasse check)

    NumericCurve numeric(long q) const
    {
        if (fixed_q && *fixed_q != q) {
            throw precondition_violation("curve '" + descriptor + "' fixes q = " + std::to_string(*fixed_q)
                                         + ", requested q = " + std::to_string(q));
        }
        if (q < 2) {
            throw curve_validation_error("numeric q must be an integer >= 2");
        }
        NumericCurve c;
        if (elliptic_trace) {
            c = presets::numeric_elliptic(q, *elliptic_trace);
        } else {
            c.q = q;
            c.genus = genus;
            for (const auto &b : numerator) {
                c.numerator.push_back(b.evaluate(Rational(q)));
            }
        }
        c.label = label;
        validate(c);
        return c;
    }

    SymbolicCurve symbolic() const
    {
        if (fixed_q) {
            throw mode_mismatch("curve '" + descriptor + "' fixes q = " + std::to_string(*fixed_q)
                                + " and cannot be used in symbolic mode");
        }
        SymbolicCurve c{LaurentQ::q(), genus, numerator, label};
        validate(c);
        return c;
    }
};

namespace detail
{

inline std::string trim(std::string_view s)
{
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) {
        ++a;
    }
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) {
        --b;
    }
    return std::string(s.substr(a, b - a));
}

inline std::optional<long> parse_long(std::string_view s)
{
    const std::string t = trim(s);
    if (t.empty()) {
        return std::nullopt;
    }
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) {
        return std::nullopt;
    }
    for (std::size_t k = i; k < t.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(t[k]))) {
            return std::nullopt;
        }
    }
    if (t.size() - i > 15) {
        return std::nullopt;
    }
    return std::stol(t);
}

// Integer polynomial in q, e.g. "1", "-2", "q", "3*q^2 - q + 1". Throws std::invalid_argument.
inline LaurentQ parse_q_polynomial(std::string_view src)
{
    const std::string s = [&] {
        std::string t;
        for (char c : src) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                t += c;
            }
        }
        return t;
    }();
    if (s.empty()) {
        throw std::invalid_argument("empty coefficient");
    }
    LaurentQ acc;
    std::size_t i = 0;
    while (i < s.size()) {
        long sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw std::invalid_argument("expected '+' or '-' in '" + s + "'");
        }
        const std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++i;
        }
        Integer coef = 1;
        const bool has_digits = i > start;
        if (has_digits) {
            coef = Integer(s.substr(start, i - start));
        }
        int exponent = 0;
        if (i < s.size() && (s[i] == '*' || s[i] == 'q')) {
            if (s[i] == '*') {
                if (!has_digits) {
                    throw std::invalid_argument("dangling '*' in '" + s + "'");
                }
                ++i;
            }
            if (i >= s.size() || s[i] != 'q') {
                throw std::invalid_argument("expected 'q' in '" + s + "'");
            }
            ++i;
            exponent = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                const std::size_t e0 = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    ++i;
                }
                if (i == e0 || i - e0 > 6) {
                    throw std::invalid_argument("bad exponent in '" + s + "'");
                }
                exponent = std::stoi(s.substr(e0, i - e0));
            }
        } else if (!has_digits) {
            throw std::invalid_argument("bad term in '" + s + "'");
        }
        acc += LaurentQ::monomial(exponent, Rational(coef * sign));
    }
    return acc;
}

} // namespace detail

// Curve data file: `key = value` lines, `#` starts a comment, blank lines ignored.
//   label     = free text (optional, default "custom")
//   g         = genus, integer >= 0 (required)
//   q         = integer >= 2, or `symbolic` (optional; default: usable in either mode)
//   numerator = comma-separated b_0, ..., b_{2g}; each an integer polynomial in q (required)
// Keys may appear once. Semantic checks (b_0 = 1, functional equation) run on use.
inline CurveSpec parse_curve_file(std::istream &in, const std::string &descriptor)
{
    CurveSpec spec;
    spec.descriptor = descriptor;
    std::map<std::string, std::size_t> seen;
    std::optional<int> genus;
    std::optional<std::vector<LaurentQ>> numerator;
    std::size_t numerator_line = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string body = detail::trim(line);
        if (body.empty()) {
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw curve_file_error("expected 'key = value'", lineno, "");
        }
        const std::string key = detail::trim(std::string_view(body).substr(0, eq));
        const std::string value = detail::trim(std::string_view(body).substr(eq + 1));
        if (seen.count(key)) {
            throw curve_file_error("duplicate key (first on line " + std::to_string(seen[key]) + ")", lineno, key);
        }
        seen[key] = lineno;
        if (key == "label") {
            spec.label = value.empty() ? "custom" : value;
        } else if (key == "g") {
            const auto g = detail::parse_long(value);
            if (!g || *g < 0 || *g > 64) {
                throw curve_file_error("genus must be an integer in [0, 64], got '" + value + "'", lineno, key);
            }
            genus = static_cast<int>(*g);
        } else if (key == "q") {
            if (value == "symbolic") {
                spec.fixed_q.reset();
            } else {
                const auto q = detail::parse_long(value);
                if (!q || *q < 2) {
                    throw curve_file_error("q must be an integer >= 2 or 'symbolic', got '" + value + "'", lineno,
                                           key);
                }
                spec.fixed_q = *q;
            }
        } else if (key == "numerator") {
            std::vector<LaurentQ> coeffs;
            std::stringstream ss(value);
            std::string item;
            std::size_t index = 0;
            while (std::getline(ss, item, ',')) {
                try {
                    coeffs.push_back(detail::parse_q_polynomial(item));
                } catch (const std::invalid_argument &e) {
                    throw curve_file_error("coefficient b_" + std::to_string(index) + ": " + e.what(), lineno, key);
                }
                ++index;
            }
            if (coeffs.empty() || (!value.empty() && value.back() == ',')) {
                throw curve_file_error("empty coefficient list entry", lineno, key);
            }
            numerator = std::move(coeffs);
            numerator_line = lineno;
        } else {
            throw curve_file_error("unknown key", lineno, key);
        }
    }
    if (!genus) {
        throw curve_file_error("missing required key", lineno, "g");
    }
    if (!numerator) {
        throw curve_file_error("missing required key", lineno, "numerator");
    }
    if (numerator->size() != static_cast<std::size_t>(2 * *genus + 1)) {
        throw curve_file_error("expected 2g + 1 = " + std::to_string(2 * *genus + 1) + " coefficients, got "
                                   + std::to_string(numerator->size()),
                               numerator_line, "numerator");
    }
    spec.genus = *genus;
    spec.numerator = std::move(*numerator);
    return spec;
}

// `p1`, `elliptic` (a = 0), `elliptic:<a>`, or a path to a curve data file.
inline CurveSpec resolve_curve(const std::string &what)
{
    CurveSpec spec;
    spec.descriptor = what;
    if (what == "p1") {
        spec.label = "p1";
        return spec;
    }
    if (what == "elliptic" || what.rfind("elliptic:", 0) == 0) {
        long a = 0;
        if (what != "elliptic") {
            const auto parsed = detail::parse_long(std::string_view(what).substr(9));
            if (!parsed) {
                throw precondition_violation("bad elliptic preset '" + what + "': expected elliptic:<integer a>");
            }
            a = *parsed;
        }
        spec.label = "elliptic(a=" + std::to_string(a) + ")";
        spec.genus = 1;
        spec.numerator = {LaurentQ(1), LaurentQ(-a), LaurentQ::q()};
        spec.elliptic_trace = a;
        return spec;
    }
    std::ifstream in(what);
    if (!in) {
        throw precondition_violation("unknown curve preset or unreadable file '" + what
                                     + "' (presets: p1, elliptic:<a>)");
    }
    return parse_curve_file(in, what);
}

} // namespace motivic

#endif

#ifndef MOTIVIC_REPORT_HPP
#define MOTIVIC_REPORT_HPP

#include <ostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include <motivic/curve_io.hpp>
#include <motivic/exact_scalar.hpp>
#include <motivic/laurent_q.hpp>
#include <motivic/rational.hpp>
#include <motivic/trunc_series.hpp>
#include <motivic/verify.hpp>

namespace motivic::report
{

using json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

// Rationals are exact "p/q" strings; Laurent polynomials in q are [{exp, coef}] lists.
inline json to_json(const Rational &r)
{
    return motivic::to_string(r);
}

inline json to_json(const LaurentQ &p)
{
    json terms = json::array();
    for (const auto &[e, c] : p.terms()) {
        terms.push_back({{"exp", e}, {"coef", motivic::to_string(c)}});
    }
    return terms;
}

inline json to_json(const ExactScalar &s)
{
    return s.mode() == CoefficientMode::numeric ? to_json(s.as_rational()) : to_json(s.as_laurent());
}

inline json to_json(const verify::SeriesPayload &s)
{
    json coeffs = json::array();
    for (std::size_t i = 0; i < s.coefficients.size(); ++i) {
        coeffs.push_back({{"exp", s.lowest + static_cast<int>(i)}, {"value", to_json(s.coefficients[i])}});
    }
    return {{"variable", std::string(1, s.variable)},
            {"mode", motivic::to_string(s.mode)},
            {"lowest", s.lowest},
            {"prec", s.prec},
            {"coefficients", coeffs}};
}

template <coefficient_ring R>
json to_json(const TruncSeries<R> &s)
{
    return to_json(verify::to_payload(s));
}

inline json to_json(const verify::IntervalPayload &i)
{
    return {{"lower", to_json(i.lower)}, {"upper", to_json(i.upper)}};
}

inline json to_json(const verify::Payload &p)
{
    return std::visit(
        [](const auto &v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ExactScalar>) {
                return {{"kind", "scalar"}, {"value", to_json(v)}};
            } else if constexpr (std::is_same_v<T, verify::SeriesPayload>) {
                return {{"kind", "series"}, {"series", to_json(v)}};
            } else {
                return {{"kind", "interval"}, {"interval", to_json(v)}};
            }
        },
        p);
}

inline json to_json(const verify::VerificationReport &r)
{
    json cmp = {{"mode", verify::to_string(r.comparison)}};
    if (r.comparison == verify::Comparison::valuation) {
        cmp["valuation"] = r.valuation;
    }
    if (r.epsilon) {
        cmp["epsilon"] = to_json(*r.epsilon);
    }
    return {{"suite", r.suite},
            {"identity", r.identity},
            {"item", r.item},
            {"comparison", cmp},
            {"left", to_json(r.left)},
            {"right", to_json(r.right)},
            {"verdict", r.pass ? "pass" : "fail"},
            {"notes", r.notes},
            {"runtime", {{"elapsed_ms", r.elapsed_ms}}}};
}

inline json curve_json(const CurveSpec &spec, std::optional<long> q)
{
    json num = json::array();
    for (const auto &b : spec.numerator) {
        if (q) {
            num.push_back(to_json(b.evaluate(Rational(*q))));
        } else {
            num.push_back(to_json(b));
        }
    }
    return {{"descriptor", spec.descriptor},
            {"label", spec.label},
            {"genus", spec.genus},
            {"q", q ? json(std::to_string(*q)) : json("symbolic")},
            {"numerator", num}};
}

// Remove every "runtime" member, recursively.
inline json strip_runtime(json j)
{
    if (j.is_object()) {
        j.erase("runtime");
        for (auto &[k, v] : j.items()) {
            v = strip_runtime(v);
        }
    } else if (j.is_array()) {
        for (auto &v : j) {
            v = strip_runtime(v);
        }
    }
    return j;
}

namespace detail
{

inline std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

inline void flatten(const json &j, const std::string &path, std::ostream &os)
{
    if (j.is_object()) {
        for (const auto &[k, v] : j.items()) {
            flatten(v, path.empty() ? k : path + "." + k, os);
        }
    } else if (j.is_array()) {
        if (j.empty()) {
            os << csv_field(path) << ",\n";
        }
        for (std::size_t i = 0; i < j.size(); ++i) {
            flatten(j[i], path + "[" + std::to_string(i) + "]", os);
        }
    } else {
        os << csv_field(path) << "," << csv_field(j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

} // namespace detail

// CSV view of a report document: one `path,value` row per leaf, same content as the JSON.
inline std::string to_csv(const json &doc)
{
    std::ostringstream os;
    os << "path,value\n";
    detail::flatten(doc, "", os);
    return os.str();
}

} // namespace motivic::report

#endif

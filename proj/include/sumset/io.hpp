#pragma once

#include <cctype>
#include <fstream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "sumset/bounds.hpp"
#include "sumset/classify.hpp"
#include "sumset/convex.hpp"
#include "sumset/search.hpp"

namespace sumset {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------- text formats
//
// One point per line as `x y`; coordinates are integers or reduced p/q.
// Blank lines and anything after `#` are ignored.

/// Points in file order. Errors carry `source:line:column`.
inline std::vector<Point2> parse_point_list(const std::string& text, const std::string& source = "<input>")
{
    std::vector<Point2> out;
    std::istringstream in(text);
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::vector<std::pair<std::string, std::size_t>> tokens; // token, 1-based column
        for (std::size_t i = 0; i < line.size();) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
                ++j;
            tokens.emplace_back(line.substr(i, j - i), i + 1);
            i = j;
        }
        if (tokens.empty())
            continue;
        auto where = [&](std::size_t col) { return source + ":" + std::to_string(lineno) + ":" + std::to_string(col) + ": "; };
        if (tokens.size() != 2)
            throw Error(ErrorCode::ParseError,
                        where(tokens.size() > 2 ? tokens[2].second : line.size() + 1) + "expected exactly two coordinates");
        Rational xy[2];
        for (int k = 0; k < 2; ++k) {
            try {
                xy[k] = Rational::parse(tokens[k].first);
            }
            catch (const Error&) {
                throw Error(ErrorCode::ParseError, where(tokens[k].second) + "malformed coordinate '" + tokens[k].first + "'");
            }
            if (auto slash = tokens[k].first.find('/'); slash != std::string::npos &&
                                                         tokens[k].first.substr(slash + 1) != xy[k].denominator().str())
                throw Error(ErrorCode::ParseError, where(tokens[k].second) + "fraction '" + tokens[k].first + "' is not reduced");
        }
        out.push_back({xy[0], xy[1]});
    }
    return out;
}

inline PointSet2D parse_point_set(const std::string& text, const std::string& source = "<input>")
{
    return PointSet2D(parse_point_list(text, source));
}

inline std::string format_points(std::span<const Point2> pts)
{
    std::string out;
    for (const auto& p : pts)
        out += p.x.str() + " " + p.y.str() + "\n";
    return out;
}

inline std::string format_point_set(const PointSet2D& s) { return format_points(s.points()); }

/// Vertices counter-clockwise; a rotated start is accepted and canonicalized.
inline ConvexPolygon parse_polygon(const std::string& text, const std::string& source = "<input>")
{
    auto pts = parse_point_list(text, source);
    if (pts.empty())
        throw Error(ErrorCode::ParseError, source + ": polygon has no vertices");
    try {
        return ConvexPolygon::from_vertices(pts);
    }
    catch (const Error& e) {
        throw Error(ErrorCode::ParseError, source + ": " + e.what());
    }
}

inline std::string format_polygon(const ConvexPolygon& p) { return format_points(p.vertices()); }

inline std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::ParseError, path + ": cannot open for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw Error(ErrorCode::ParseError, path + ": cannot write");
}

// ---------------------------------------------------------------------- JSON

inline Json to_json(const Rational& r) { return r.str(); }

inline Json to_json(const Point2& p) { return Json::array({p.x.str(), p.y.str()}); }

/// Point sets travel inside JSON as point-file text.
inline Json to_json(const PointSet2D& s) { return format_point_set(s); }

inline Json to_json(const ConvexPolygon& p) { return format_polygon(p); }

template <class T>
Json to_json(const std::vector<T>& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(to_json(x));
    return a;
}

inline Json to_json(const BoundReport& r)
{
    return {{"mode", to_string(r.mode)}, {"m", r.m},       {"n", r.n},
            {"lhs", r.lhs.str()},        {"rhs", r.rhs.str()}, {"gap", r.gap.str()},
            {"extremal", r.extremal}};
}

inline Json to_json(const TrapezoidSpec& s) { return {{"m", s.m}, {"h", s.h}, {"c", s.c.str()}, {"d", s.d.str()}}; }

inline Json to_json(const EpsilonSpec& s) { return {{"base", to_json(s.base)}, {"ones", s.ones}}; }

inline Json to_json(const CaseCSpec& s) { return {{"m", s.m}, {"n", s.n}, {"k", s.k}}; }

inline Json to_json(const AffineMap2D& m)
{
    return {{"a11", m.a11().str()}, {"a12", m.a12().str()}, {"a21", m.a21().str()},
            {"a22", m.a22().str()}, {"tx", m.tx().str()},   {"ty", m.ty().str()}};
}

inline Json to_json(const OneDimensionalCase& c)
{
    return {{"equality", c.equality}, {"min_one", c.min_one}, {"common_ap", c.common_ap}, {"cdt_condition", c.cdt_condition}};
}

template <class T>
Json opt_json(const std::optional<T>& v)
{
    return v ? to_json(*v) : Json(nullptr);
}

inline Json to_json(const Classification& c)
{
    Json also = Json::array();
    for (auto v : c.also_matches)
        also.push_back(to_string(v));
    return {{"verdict", to_string(c.verdict)},
            {"report", to_json(c.report)},
            {"trapezoid_a", opt_json(c.trapezoid_a)},
            {"trapezoid_b", opt_json(c.trapezoid_b)},
            {"epsilon", opt_json(c.epsilon)},
            {"case_c", opt_json(c.case_c)},
            {"roles_swapped", c.roles_swapped},
            {"witness_map", opt_json(c.witness_map)},
            {"offset_a", to_json(c.offset_a)},
            {"offset_b", to_json(c.offset_b)},
            {"one_dimensional", opt_json(c.one_dimensional)},
            {"also_matches", also}};
}

inline Json to_json(const PairRecord& p) { return {{"a", to_json(p.a)}, {"b", to_json(p.b)}, {"reason", p.reason}}; }

inline Json to_json(const SweepReport& r)
{
    Json tally = Json::object();
    for (const auto& [k, v] : r.classified_tally)
        tally[k] = v;
    return {{"pairs_checked", r.pairs_checked}, {"violations", to_json(r.violations)},
            {"extremal_count", r.extremal_count}, {"classified_tally", tally},
            {"unclassified", to_json(r.unclassified)}, {"wild_regime_count", r.wild_regime_count}};
}

inline Json to_json(const AveragingReport& r)
{
    Json u = Json::object();
    for (const auto& [t, v] : r.u_values)
        u[t.str()] = v.str();
    return {{"u_values", u},          {"u_plus_mean", r.u_plus_mean.str()}, {"full_mean", r.full_mean.str()},
            {"rhs", r.rhs.str()},     {"equality", r.equality},             {"ap_condition", r.ap_condition}};
}

inline Json to_json(const ContinuousReport& r)
{
    return {{"area_p", r.area_p.str()},
            {"area_q", r.area_q.str()},
            {"m", r.m.str()},
            {"n", r.n.str()},
            {"area_sum", r.area_sum.str()},
            {"bonnesen_rhs", r.bonnesen_rhs.str()},
            {"gap", r.gap.str()},
            {"extremal", r.extremal},
            {"bm", {{"comparison", to_string(r.bm_comparison)},
                    {"lhs_squared", r.bm_lhs_squared.str()},
                    {"rhs_squared", r.bm_rhs_squared.str()}}}};
}

inline Json to_json(const StretchDecomposition& d) { return {{"core", to_json(d.core)}, {"amount", d.amount.str()}}; }

inline Json to_json(const Homothety& h) { return {{"ratio", h.ratio.str()}, {"translation", to_json(h.translation)}}; }

inline Json to_json(const DecompositionResult& d)
{
    return {{"p", to_json(d.p)}, {"q", to_json(d.q)}, {"certificate", opt_json(d.certificate)}, {"extremal", d.extremal}};
}

inline Json to_json(const GraphBounds& g)
{
    return {{"delta", g.delta.str()},
            {"bonnesen_rhs", g.bonnesen_rhs.str()},
            {"area_sum", g.area_sum.str()},
            {"containment_bound", g.containment_bound.str()},
            {"slope_gap", opt_json(g.slope_gap)},
            {"slope_gap_bound", opt_json(g.slope_gap_bound)},
            {"c_constant", g.c_constant.str()},
            {"graph_identity", g.graph_identity ? Json(*g.graph_identity) : Json(nullptr)}};
}

inline Json to_json(const PairDiagnostic& d)
{
    Json bounds = Json::array();
    for (const auto& b : d.bounds)
        bounds.push_back(to_json(b));
    return {{"sumset_size", d.sumset_size},
            {"bounds", bounds},
            {"compression_chain", to_json(d.compression_chain)},
            {"chain_diagnostic", to_json(d.chain_diagnostic)},
            {"thm2", opt_json(d.thm2)},
            {"thm3", opt_json(d.thm3)},
            {"one_dimensional", opt_json(d.one_dimensional)},
            {"split", d.split ? Json(*d.split) : Json(nullptr)},
            {"skipped", d.skipped}};
}

// ------------------------------------------------------------- JSON readers

inline Rational rational_from_json(const Json& j, const std::string& what)
{
    try {
        if (j.is_string())
            return Rational::parse(j.get<std::string>());
        if (j.is_number_integer())
            return Rational(j.get<std::int64_t>());
    }
    catch (const Error&) {
    }
    throw Error(ErrorCode::ParseError, what + ": expected a rational string");
}

inline PointSet2D point_set_from_json(const Json& j, const std::string& what)
{
    if (!j.is_string())
        throw Error(ErrorCode::ParseError, what + ": expected point-file text");
    return parse_point_set(j.get<std::string>(), what);
}

inline ConvexPolygon polygon_from_json(const Json& j, const std::string& what)
{
    if (!j.is_string())
        throw Error(ErrorCode::ParseError, what + ": expected polygon text");
    return parse_polygon(j.get<std::string>(), what);
}

inline Json parse_json(const std::string& text, const std::string& source)
{
    try {
        return Json::parse(text);
    }
    catch (const Json::parse_error& e) {
        throw Error(ErrorCode::ParseError, source + ": byte " + std::to_string(e.byte) + ": invalid JSON");
    }
}

/// Adds a decimal rendering next to every rational string, under "approx".
inline Json approx_annotate(const Json& j)
{
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>()).approx();
        }
        catch (const Error&) {
            return nullptr;
        }
    }
    if (j.is_array()) {
        Json a = Json::array();
        for (const auto& x : j)
            a.push_back(approx_annotate(x));
        return a;
    }
    if (j.is_object()) {
        Json o = Json::object();
        for (const auto& [k, v] : j.items()) {
            Json sub = approx_annotate(v);
            if (!sub.is_null() && !(sub.is_object() && sub.empty()))
                o[k] = sub;
        }
        return o;
    }
    return nullptr;
}

} // namespace sumset

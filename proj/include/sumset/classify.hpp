#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "sumset/bounds.hpp"
#include "sumset/families.hpp"
#include "sumset/point_set.hpp"

namespace sumset {

struct RowRecord {
    Rational level;
    std::size_t count = 0;
    Rational min_x;
    Rational max_x;
    std::optional<Rational> common_difference; // engaged iff count >= 2 and the row is an AP
};

using RowProfile = std::vector<RowRecord>;

/// Horizontal rows in increasing level order.
inline RowProfile row_profile(const PointSet2D& x)
{
    RowProfile out;
    for (const auto& [level, pts] : sections_by_level(x, Axis::Horizontal)) {
        RowRecord r;
        r.level = level;
        r.count = pts.size();
        r.min_x = pts.front().x;
        r.max_x = pts.back().x;
        std::vector<Rational> xs;
        for (const auto& p : pts)
            xs.push_back(p.x);
        if (auto d = scalar_progression(xs); d && *d)
            r.common_difference = **d;
        out.push_back(std::move(r));
    }
    return out;
}

struct ClosedInterval {
    Rational lo;
    Rational hi;
    friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

struct TrapezoidZones {
    ClosedInterval i1; // [0, (m-1)d]
    ClosedInterval i2; // [(m-1)d, h-1+(m-1)c]
    ClosedInterval i3; // [h-1+(m-1)c, h-1]
};

inline TrapezoidZones trapezoid_zones(const TrapezoidSpec& s)
{
    Rational mm(s.m - 1), top = Rational(s.h) - 1;
    return {{0, mm * s.d}, {mm * s.d, top + mm * s.c}, {top + mm * s.c, top}};
}

enum class Verdict {
    NotExtremal,
    OneDimensional,
    TrapezoidPair,
    EpsTrapezoidPair,
    CaseCPair,
    ExtremalUnclassified,
};

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::NotExtremal: return "NotExtremal";
    case Verdict::OneDimensional: return "OneDimensional";
    case Verdict::TrapezoidPair: return "TrapezoidPair";
    case Verdict::EpsTrapezoidPair: return "EpsTrapezoidPair";
    case Verdict::CaseCPair: return "CaseCPair";
    case Verdict::ExtremalUnclassified: return "ExtremalUnclassified";
    }
    return "?";
}

struct OneDimensionalCase {
    bool equality = false;      // |A+B| = |A|+|B|-1
    bool min_one = false;       // min(|A|,|B|) = 1
    bool common_ap = false;     // both APs with one shared difference
    bool cdt_condition = false; // min_one || common_ap
};

/// Verdict plus recovered parameters.
///
/// With W = *witness_map, translate(apply_map(A, W), offset_a) is exactly the
/// generated family member in A's role, and likewise for B.
/// EpsTrapezoidPair: `epsilon` describes A and `trapezoid_b` describes B, or,
/// when roles_swapped, `epsilon` describes B and `trapezoid_a` describes A.
/// CaseCPair: gen_case_c(*case_c) yields (A, B), or (B, A) when roles_swapped.
struct Classification {
    Verdict verdict = Verdict::NotExtremal;
    BoundReport report;
    std::optional<TrapezoidSpec> trapezoid_a;
    std::optional<TrapezoidSpec> trapezoid_b;
    std::optional<EpsilonSpec> epsilon;
    std::optional<CaseCSpec> case_c;
    bool roles_swapped = false;
    std::optional<AffineMap2D> witness_map;
    Point2 offset_a;
    Point2 offset_b;
    std::optional<OneDimensionalCase> one_dimensional;
    std::vector<Verdict> also_matches; // further families the pair belongs to
};

inline bool is_extremal(const PointSet2D& a, const PointSet2D& b, BoundMode mode) { return bound(mode, a, b).extremal; }

namespace detail {

/// Shared difference of several sorted sequences that must all be APs.
/// Sequences of length <= 1 impose nothing; `fallback` is used if none does.
inline std::optional<Rational> shared_difference(const std::vector<std::vector<Rational>>& seqs,
                                                 const Rational& fallback = 1)
{
    std::optional<Rational> diff;
    for (const auto& s : seqs) {
        auto d = scalar_progression(s);
        if (!d)
            return std::nullopt;
        if (!*d)
            continue;
        if (diff && *diff != **d)
            return std::nullopt;
        diff = **d;
    }
    return diff ? diff : std::optional<Rational>(fallback);
}

/// Offset t with translate(x, t) == target, if one exists.
inline std::optional<Point2> translation_to(const PointSet2D& x, const PointSet2D& target)
{
    if (x.size() != target.size() || x.empty())
        return std::nullopt;
    Point2 t = target[0] - x[0]; // lexicographic order is translation invariant
    for (std::size_t i = 1; i < x.size(); ++i)
        if (target[i] - x[i] != t)
            return std::nullopt;
    return t;
}

struct StandardForm {
    TrapezoidSpec spec;
    Point2 offset; // translate(x, offset) == gen_trapezoid(spec)
};

/// Recognizes x as a translate of a standard trapezoid with vertical columns.
inline std::optional<StandardForm> as_standard_trapezoid(const PointSet2D& x)
{
    auto cols = sections_by_level(x, Axis::Vertical);
    std::vector<Rational> bottoms, tops;
    Rational prev_x;
    bool first = true;
    for (const auto& [cx, pts] : cols) {
        if (!first && cx - prev_x != 1)
            return std::nullopt;
        for (std::size_t i = 1; i < pts.size(); ++i)
            if (pts[i].y - pts[i - 1].y != 1)
                return std::nullopt;
        bottoms.push_back(pts.front().y);
        tops.push_back(pts.back().y);
        prev_x = cx;
        first = false;
    }
    auto d = scalar_progression(bottoms), c = scalar_progression(tops);
    if (!d || !c)
        return std::nullopt;
    TrapezoidSpec s;
    s.m = cols.size();
    s.h = cols.begin()->second.size();
    s.d = *d ? **d : Rational(0);
    s.c = *c ? **c : Rational(0);
    Point2 offset{-cols.begin()->first, -bottoms.front()};
    // Regeneration guards against any mismatch in the recognition above.
    if (translate(x, offset) != gen_trapezoid(s))
        return std::nullopt;
    return StandardForm{s, offset};
}

struct Candidate {
    AffineMap2D map; // linear, upper triangular
    PointSet2D a;
    PointSet2D b;
};

struct EpsMatch {
    EpsilonSpec eps;
    TrapezoidSpec partner;
    Point2 eps_offset;
    Point2 partner_offset;
};

/// x in the shifted role, y in the standard role T(n, (n-1)d+1, c, d).
inline std::optional<EpsMatch> match_eps(const PointSet2D& x, std::size_t mx, const PointSet2D& y, std::size_t ny)
{
    auto sy = as_standard_trapezoid(y);
    if (!sy || sy->spec.m != ny)
        return std::nullopt;
    auto c = sy->spec.c.to_int64(), d = sy->spec.d.to_int64();
    if (!c || !d || *c < 0 || *d < 0 || (*c == 0 && *d == 0))
        return std::nullopt;
    if (sy->spec.h != (ny - 1) * static_cast<std::size_t>(*d) + 1)
        return std::nullopt;

    auto rows = row_profile(x);
    auto base_rows = static_cast<std::int64_t>(rows.size()) - static_cast<std::int64_t>(mx - 1) * *c;
    if (base_rows < 1)
        return std::nullopt;
    TrapezoidSpec base{mx, static_cast<std::size_t>(base_rows), *c, *d};
    try {
        validate(base);
    }
    catch (const Error&) {
        return std::nullopt;
    }
    auto base_profile = row_profile(gen_trapezoid(base));
    if (base_profile.size() != rows.size())
        return std::nullopt;

    Point2 offset{-rows.front().min_x, -rows.front().level};
    std::vector<std::int64_t> ones;
    Rational prev_shift = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].level - rows.front().level != Rational(i))
            return std::nullopt;
        Rational shift = rows[i].min_x + offset.x - base_profile[i].min_x;
        Rational step = shift - prev_shift;
        if (step == 1)
            ones.push_back(static_cast<std::int64_t>(i));
        else if (!step.is_zero())
            return std::nullopt;
        prev_shift = shift;
    }
    EpsilonSpec eps{base, ones};
    try {
        validate(eps);
    }
    catch (const Error&) {
        return std::nullopt;
    }
    if (gen_eps_trapezoid(eps) != translate(x, offset))
        return std::nullopt;
    return EpsMatch{eps, sy->spec, offset, sy->offset};
}

struct CaseCMatch {
    CaseCSpec spec;
    Point2 offset_x;
    Point2 offset_y;
};

/// x in the A role of the displayed case (c) sets, y in the B role.
inline std::optional<CaseCMatch> match_case_c(const PointSet2D& x, std::size_t mx, const PointSet2D& y,
                                              std::size_t ny)
{
    CaseCSpec s{static_cast<std::int64_t>(mx), static_cast<std::int64_t>(ny), 1};
    auto oy = translation_to(y, gen_case_c(s).second);
    if (!oy)
        return std::nullopt;
    for (; s.k <= 2 * static_cast<std::int64_t>(x.size()) + 7; s.k += 2) {
        auto ga = gen_case_c(s).first;
        if (ga.size() > x.size())
            break;
        if (auto ox = translation_to(x, ga))
            return CaseCMatch{s, *ox, *oy};
    }
    return std::nullopt;
}

/// Shears (x, y) -> (x - g y, y) worth trying: consecutive row-extremum differences and their neighbours.
inline std::set<Rational> shear_candidates(const PointSet2D& a, const PointSet2D& b)
{
    std::set<Rational> out{0};
    for (const auto* x : {&a, &b}) {
        auto rows = row_profile(*x);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            Rational dl = rows[i].level - rows[i - 1].level;
            for (const Rational& diff : {rows[i].min_x - rows[i - 1].min_x, rows[i].max_x - rows[i - 1].max_x}) {
                Rational g = diff / dl;
                out.insert(g);
                out.insert(g + 1);
                out.insert(g - 1);
            }
        }
    }
    return out;
}

inline void require_two_dimensional(const PointSet2D& a, const PointSet2D& b, const char* what)
{
    if (!cover_stats(a).is_two_dimensional || !cover_stats(b).is_two_dimensional)
        throw Error(ErrorCode::HypothesisViolated, std::string(what) + " requires both sets two-dimensional");
}

} // namespace detail

inline Classification classify_1d(const PointSet2D& a, const PointSet2D& b)
{
    detail::require_nonempty(a, "classify_1d");
    detail::require_nonempty(b, "classify_1d");
    if (!is_collinear(a) || !is_collinear(b))
        throw Error(ErrorCode::NotCollinear, "classify_1d requires collinear sets");
    if (!on_parallel_lines(a, b))
        throw Error(ErrorCode::HypothesisViolated, "classify_1d requires parallel lines");
    Classification out;
    out.report = bound(BoundMode::OneDimensional, a, b);
    OneDimensionalCase od;
    od.equality = out.report.extremal;
    od.min_one = std::min(a.size(), b.size()) == 1;
    auto pa = arithmetic_progression_of(a), pb = arithmetic_progression_of(b);
    od.common_ap = pa && pb && (!pa->difference || !pb->difference || *pa->difference == *pb->difference);
    od.cdt_condition = od.min_one || od.common_ap;
    out.one_dimensional = od;
    out.verdict = Verdict::OneDimensional;
    return out;
}

inline Classification classify_thm2(const PointSet2D& a, const PointSet2D& b)
{
    detail::require_nonempty(a, "classify_thm2");
    detail::require_nonempty(b, "classify_thm2");
    if (on_parallel_lines(a, b))
        return classify_1d(a, b);
    detail::require_two_dimensional(a, b, "classify_thm2");

    Classification out;
    out.report = bound(BoundMode::LinesGS, a, b);
    if (!out.report.extremal)
        return out;
    out.verdict = Verdict::ExtremalUnclassified;

    auto alpha = detail::shared_difference({x_values(a), x_values(b)});
    std::vector<std::vector<Rational>> columns;
    for (const auto* x : {&a, &b})
        for (const auto& [lvl, pts] : sections_by_level(*x, Axis::Vertical)) {
            std::vector<Rational> ys;
            for (const auto& p : pts)
                ys.push_back(p.y);
            columns.push_back(std::move(ys));
        }
    auto beta = detail::shared_difference(columns);
    if (!alpha || !beta)
        return out;

    auto phi = AffineMap2D::diagonal(Rational(1) / *alpha, Rational(1) / *beta);
    auto sa = detail::as_standard_trapezoid(apply_map(a, phi));
    auto sb = detail::as_standard_trapezoid(apply_map(b, phi));
    if (!sa || !sb || sa->spec.c != sb->spec.c || sa->spec.d != sb->spec.d)
        return out;
    out.verdict = Verdict::TrapezoidPair;
    out.trapezoid_a = sa->spec;
    out.trapezoid_b = sb->spec;
    out.witness_map = phi;
    out.offset_a = sa->offset;
    out.offset_b = sb->offset;
    return out;
}

inline Classification classify_thm3(const PointSet2D& a, const PointSet2D& b)
{
    detail::require_nonempty(a, "classify_thm3");
    detail::require_nonempty(b, "classify_thm3");
    detail::require_two_dimensional(a, b, "classify_thm3");
    const std::size_t m = cover_stats(a).max_horizontal_section;
    const std::size_t n = cover_stats(b).max_horizontal_section;
    if (m < 2 || n < 2)
        throw Error(ErrorCode::HypothesisViolated, "classify_thm3 requires m, n >= 2");

    Classification out;
    out.report = bound(BoundMode::SectionsGS, a, b);
    if (!out.report.extremal)
        return out;
    out.verdict = Verdict::ExtremalUnclassified;

    auto beta = detail::shared_difference({y_values(a), y_values(b)});
    std::vector<std::vector<Rational>> rows;
    for (const auto* x : {&a, &b})
        for (const auto& [lvl, pts] : sections_by_level(*x, Axis::Horizontal)) {
            std::vector<Rational> xs;
            for (const auto& p : pts)
                xs.push_back(p.x);
            rows.push_back(std::move(xs));
        }
    auto alpha = detail::shared_difference(rows);
    if (!alpha || !beta)
        return out;

    auto scale = AffineMap2D::diagonal(Rational(1) / *alpha, Rational(1) / *beta);
    std::vector<detail::Candidate> cands;
    for (auto [sx, sy] : std::array<std::pair<int, int>, 4>{{{1, 1}, {-1, 1}, {1, -1}, {-1, -1}}}) {
        auto base = AffineMap2D::diagonal(sx, sy).compose(scale);
        auto a1 = apply_map(a, base), b1 = apply_map(b, base);
        for (const auto& g : detail::shear_candidates(a1, b1)) {
            auto shear = AffineMap2D::upper_triangular(1, -g, 1);
            cands.push_back({shear.compose(base), apply_map(a1, shear), apply_map(b1, shear)});
        }
    }

    auto record = [&](Verdict v) {
        if (out.verdict == Verdict::ExtremalUnclassified) {
            out.verdict = v;
            return true;
        }
        out.also_matches.push_back(v);
        return false;
    };

    // Family (a) before (b) before (c); later matches are only noted.
    for (const auto& cand : cands) {
        auto sa = detail::as_standard_trapezoid(cand.a);
        if (!sa || sa->spec.m != m)
            continue;
        auto sb = detail::as_standard_trapezoid(cand.b);
        if (!sb || sb->spec.m != n || sa->spec.c != sb->spec.c || sa->spec.d != sb->spec.d)
            continue;
        if (record(Verdict::TrapezoidPair)) {
            out.trapezoid_a = sa->spec;
            out.trapezoid_b = sb->spec;
            out.witness_map = cand.map;
            out.offset_a = sa->offset;
            out.offset_b = sb->offset;
        }
        break;
    }
    for (const auto& cand : cands) {
        auto direct = detail::match_eps(cand.a, m, cand.b, n);
        auto swapped = direct ? std::nullopt : detail::match_eps(cand.b, n, cand.a, m);
        if (!direct && !swapped)
            continue;
        if (record(Verdict::EpsTrapezoidPair)) {
            out.witness_map = cand.map;
            out.roles_swapped = !direct;
            const auto& mt = direct ? *direct : *swapped;
            out.epsilon = mt.eps;
            if (direct) {
                out.trapezoid_b = mt.partner;
                out.offset_a = mt.eps_offset;
                out.offset_b = mt.partner_offset;
            }
            else {
                out.trapezoid_a = mt.partner;
                out.offset_a = mt.partner_offset;
                out.offset_b = mt.eps_offset;
            }
        }
        break;
    }
    for (const auto& cand : cands) {
        auto direct = detail::match_case_c(cand.a, m, cand.b, n);
        auto swapped = direct ? std::nullopt : detail::match_case_c(cand.b, n, cand.a, m);
        if (!direct && !swapped)
            continue;
        if (record(Verdict::CaseCPair)) {
            out.witness_map = cand.map;
            out.roles_swapped = !direct;
            const auto& mt = direct ? *direct : *swapped;
            out.case_c = mt.spec;
            out.offset_a = direct ? mt.offset_x : mt.offset_y;
            out.offset_b = direct ? mt.offset_y : mt.offset_x;
        }
        break;
    }
    return out;
}

/// Both halves obtained by cutting at the lowest rows of maximal size are extremal.
inline bool split_check(const PointSet2D& a, const PointSet2D& b)
{
    detail::require_nonempty(a, "split_check");
    detail::require_nonempty(b, "split_check");
    const auto sa = cover_stats(a), sb = cover_stats(b);
    if (sa.max_horizontal_section < 2 || sb.max_horizontal_section < 2)
        throw Error(ErrorCode::HypothesisViolated, "split_check requires m, n >= 2");
    if (!bound(BoundMode::SectionsGS, a, b).extremal)
        throw Error(ErrorCode::HypothesisViolated, "split_check requires a SectionsGS-extremal pair");

    auto first_max_level = [](const PointSet2D& x, std::size_t size) {
        for (const auto& [lvl, pts] : sections_by_level(x, Axis::Horizontal))
            if (pts.size() == size)
                return lvl;
        throw Error(ErrorCode::HypothesisViolated, "no maximal row");
    };
    const Rational t = first_max_level(a, sa.max_horizontal_section);
    const Rational u = first_max_level(b, sb.max_horizontal_section);
    auto cut = [](const PointSet2D& x, const Rational& level, bool lower) {
        std::vector<Point2> out;
        for (const auto& p : x)
            if (lower ? p.y <= level : p.y >= level)
                out.push_back(p);
        return PointSet2D(std::move(out));
    };
    return bound(BoundMode::SectionsGS, cut(a, t, true), cut(b, u, true)).extremal &&
           bound(BoundMode::SectionsGS, cut(a, t, false), cut(b, u, false)).extremal;
}

} // namespace sumset

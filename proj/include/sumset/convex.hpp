#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "sumset/point_set.hpp"

namespace sumset {

/// Convex polygon with exact vertices in counter-clockwise order, no three
/// consecutive vertices collinear, starting at the vertex with lowest y and
/// then lowest x. One or two vertices encode a point or a segment.
class ConvexPolygon {
public:
    ConvexPolygon() = default;

    /// Convex hull of arbitrary points.
    static ConvexPolygon hull(std::vector<Point2> pts, bool degenerate_ok = true)
    {
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (pts.empty())
            throw Error(ErrorCode::EmptySet, "convex hull of no points");
        std::vector<Point2> h;
        if (pts.size() >= 3) {
            h.resize(2 * pts.size());
            std::size_t k = 0;
            for (const auto& p : pts) {
                while (k >= 2 && cross(h[k - 2], h[k - 1], p).sign() <= 0)
                    --k;
                h[k++] = p;
            }
            for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
                while (k >= t && cross(h[k - 2], h[k - 1], pts[i]).sign() <= 0)
                    --k;
                h[k++] = pts[i];
            }
            h.resize(k - 1);
        }
        else {
            h = pts;
        }
        if (h.size() < 3 && pts.size() >= 2)
            h = {pts.front(), pts.back()}; // collinear input
        ConvexPolygon out;
        out.vertices_ = std::move(h);
        out.canonicalize();
        if (!degenerate_ok && out.vertices_.size() < 3)
            throw Error(ErrorCode::InvalidSpec, "polygon is degenerate");
        return out;
    }

    /// Accepts a vertex list that is already strictly convex and counter-clockwise.
    static ConvexPolygon from_vertices(const std::vector<Point2>& ccw, bool degenerate_ok = true)
    {
        ConvexPolygon h = hull(ccw, degenerate_ok);
        ConvexPolygon given;
        given.vertices_ = ccw;
        given.canonicalize();
        if (given.vertices_ != h.vertices_)
            throw Error(ErrorCode::InvalidSpec, "vertices are not a strictly convex counter-clockwise polygon");
        return h;
    }

    const std::vector<Point2>& vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    bool is_degenerate() const noexcept { return vertices_.size() < 3; }

    /// Edge vectors v[i+1] - v[i], cyclically; a segment has two opposite edges.
    std::vector<Point2> edges() const
    {
        std::vector<Point2> e;
        if (vertices_.size() < 2)
            return e;
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            e.push_back(vertices_[(i + 1) % vertices_.size()] - vertices_[i]);
        return e;
    }

    friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

private:
    void canonicalize()
    {
        auto it = std::min_element(vertices_.begin(), vertices_.end(),
                                   [](const Point2& a, const Point2& b) { return std::tie(a.y, a.x) < std::tie(b.y, b.x); });
        std::rotate(vertices_.begin(), it, vertices_.end());
    }

    std::vector<Point2> vertices_;
};

namespace detail {

/// Polar-angle order on [0, 2pi) for nonzero vectors.
inline bool angle_less(const Point2& u, const Point2& v)
{
    auto half = [](const Point2& w) { return w.y.sign() > 0 || (w.y.is_zero() && w.x.sign() > 0) ? 0 : 1; };
    int hu = half(u), hv = half(v);
    if (hu != hv)
        return hu < hv;
    return cross(u, v).sign() > 0;
}

} // namespace detail

/// Edge-merge Minkowski sum.
inline ConvexPolygon poly_minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q)
{
    if (p.size() == 0 || q.size() == 0)
        throw Error(ErrorCode::EmptySet, "Minkowski sum of empty polygon");
    auto ep = p.edges(), eq = q.edges();
    std::vector<Point2> out;
    Point2 cur = p.vertices()[0] + q.vertices()[0];
    out.push_back(cur);
    std::size_t i = 0, j = 0;
    while (i < ep.size() || j < eq.size()) {
        if (j == eq.size() || (i < ep.size() && detail::angle_less(ep[i], eq[j])))
            cur = cur + ep[i++];
        else if (i == ep.size() || detail::angle_less(eq[j], ep[i]))
            cur = cur + eq[j++];
        else {
            cur = cur + ep[i++] + eq[j++];
        }
        out.push_back(cur);
    }
    return ConvexPolygon::hull(std::move(out));
}

inline Rational area(const ConvexPolygon& p)
{
    const auto& v = p.vertices();
    if (v.size() < 3)
        return 0;
    Rational twice;
    for (std::size_t i = 0; i < v.size(); ++i)
        twice += cross(v[i], v[(i + 1) % v.size()]);
    return twice / 2;
}

/// max x - min x.
inline Rational projection_length(const ConvexPolygon& p)
{
    const auto& v = p.vertices();
    auto [lo, hi] = std::minmax_element(v.begin(), v.end(), [](const Point2& a, const Point2& b) { return a.x < b.x; });
    return hi->x - lo->x;
}

struct AreaProjection {
    Rational area;
    Rational projection_length;
};

inline AreaProjection area_and_projection(const ConvexPolygon& p) { return {area(p), projection_length(p)}; }

/// Lower convex and upper concave boundary, each left to right with strictly increasing x.
struct BoundaryChains {
    std::vector<Point2> lower;
    std::vector<Point2> upper;
};

inline BoundaryChains boundary_chains(const ConvexPolygon& p)
{
    const auto& v = p.vertices();
    const std::size_t n = v.size();
    if (n == 0)
        throw Error(ErrorCode::EmptySet, "boundary of empty polygon");
    auto pick = [&](bool want_max_x, bool want_max_y) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < n; ++i) {
            const auto &a = v[i], &b = v[best];
            if (a.x != b.x ? (want_max_x ? a.x > b.x : a.x < b.x) : (want_max_y ? a.y > b.y : a.y < b.y))
                best = i;
        }
        return best;
    };
    auto walk = [&](std::size_t from, std::size_t to) {
        std::vector<Point2> out{v[from]};
        for (std::size_t i = from; i != to;) {
            i = (i + 1) % n;
            out.push_back(v[i]);
        }
        return out;
    };
    BoundaryChains c;
    c.lower = walk(pick(false, false), pick(true, false));
    c.upper = walk(pick(true, true), pick(false, true));
    std::reverse(c.upper.begin(), c.upper.end());
    return c;
}

/// Piecewise-linear interpolation on a chain with strictly increasing x.
inline Rational eval_chain(const std::vector<Point2>& chain, const Rational& x)
{
    if (x < chain.front().x || x > chain.back().x)
        throw Error(ErrorCode::InvalidSpec, "evaluation outside chain domain");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const auto &a = chain[i], &b = chain[i + 1];
        if (x <= b.x)
            return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
    }
    return chain.back().y;
}

/// Slopes of the non-vertical edges of a chain.
inline std::vector<Rational> chain_slopes(const std::vector<Point2>& chain)
{
    std::vector<Rational> s;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        s.push_back((chain[i + 1].y - chain[i].y) / (chain[i + 1].x - chain[i].x));
    return s;
}

/// {u <= y <= v + h}: the upper chain moves up by h.
inline ConvexPolygon stretch_vertical(const ConvexPolygon& p, const Rational& h)
{
    if (h.sign() < 0)
        throw Error(ErrorCode::InvalidAmount, "stretch amount must be non-negative");
    auto c = boundary_chains(p);
    std::vector<Point2> pts = c.lower;
    for (const auto& q : c.upper)
        pts.push_back({q.x, q.y + h});
    return ConvexPolygon::hull(std::move(pts));
}

struct StretchDecomposition {
    ConvexPolygon core;
    Rational amount;
};

/// Largest h with p = stretch_vertical(core, h). v - u is concave, so its
/// minimum sits at an endpoint of the projection.
inline StretchDecomposition maximal_compression(const ConvexPolygon& p)
{
    auto c = boundary_chains(p);
    Rational left = c.upper.front().y - c.lower.front().y;
    Rational right = c.upper.back().y - c.lower.back().y;
    Rational amount = min(left, right);
    std::vector<Point2> pts = c.lower;
    for (const auto& q : c.upper)
        pts.push_back({q.x, q.y - amount});
    return {ConvexPolygon::hull(std::move(pts)), amount};
}

struct Homothety {
    Rational ratio;    // q = ratio * p + translation, ratio > 0
    Point2 translation;
};

inline std::optional<Homothety> homothety(const ConvexPolygon& p, const ConvexPolygon& q)
{
    if (p.size() != q.size() || p.size() == 0)
        return std::nullopt;
    const Point2 p0 = p.vertices()[0], q0 = q.vertices()[0];
    if (p.size() == 1)
        return Homothety{1, q0 - p0};
    auto ep = p.edges(), eq = q.edges();
    Rational ratio = !ep[0].x.is_zero() ? eq[0].x / ep[0].x : eq[0].y / ep[0].y;
    if (ratio.sign() <= 0)
        return std::nullopt;
    for (std::size_t i = 0; i < ep.size(); ++i)
        if (ratio * ep[i] != eq[i])
            return std::nullopt;
    return Homothety{ratio, q0 - ratio * p0};
}

enum class Ordering { Less, Equal, Greater };

inline const char* to_string(Ordering o)
{
    switch (o) {
    case Ordering::Less: return "lt";
    case Ordering::Equal: return "eq";
    case Ordering::Greater: return "gt";
    }
    return "?";
}

struct ContinuousReport {
    Rational area_p;
    Rational area_q;
    Rational m;
    Rational n;
    Rational area_sum;
    Rational bonnesen_rhs;
    Rational gap;
    bool extremal = false;
    /// bonnesen_rhs versus (sqrt|P| + sqrt|Q|)^2, certified by comparing
    /// bm_lhs_squared = ((n/m)|P| + (m/n)|Q|)^2 with bm_rhs_squared = 4|P||Q|.
    Ordering bm_comparison = Ordering::Equal;
    Rational bm_lhs_squared;
    Rational bm_rhs_squared;
};

inline Rational bonnesen_rhs(const Rational& area_p, const Rational& m, const Rational& area_q, const Rational& n)
{
    return (area_p / m + area_q / n) * (m + n);
}

inline ContinuousReport bonnesen_report(const ConvexPolygon& p, const ConvexPolygon& q)
{
    ContinuousReport r;
    r.m = projection_length(p);
    r.n = projection_length(q);
    if (r.m.sign() <= 0 || r.n.sign() <= 0)
        throw Error(ErrorCode::DegenerateProjection, "horizontal projection has zero length");
    r.area_p = area(p);
    r.area_q = area(q);
    r.area_sum = area(poly_minkowski_sum(p, q));
    r.bonnesen_rhs = bonnesen_rhs(r.area_p, r.m, r.area_q, r.n);
    r.gap = r.area_sum - r.bonnesen_rhs;
    r.extremal = r.gap.is_zero();
    Rational s = r.n / r.m * r.area_p + r.m / r.n * r.area_q;
    r.bm_lhs_squared = s * s;
    r.bm_rhs_squared = Rational(4) * r.area_p * r.area_q;
    r.bm_comparison = r.bm_lhs_squared < r.bm_rhs_squared   ? Ordering::Less
                      : r.bm_lhs_squared > r.bm_rhs_squared ? Ordering::Greater
                                                            : Ordering::Equal;
    return r;
}

struct DecompositionResult {
    StretchDecomposition p;
    StretchDecomposition q;
    std::optional<Homothety> certificate; // core_q = ratio * core_p + translation
    bool extremal = false;
};

/// Homothetic maximal compressions must coincide with Bonnesen equality;
/// a disagreement throws VerificationFailed.
inline DecompositionResult decompose_and_classify(const ConvexPolygon& p, const ConvexPolygon& q)
{
    DecompositionResult r;
    r.extremal = bonnesen_report(p, q).extremal;
    r.p = maximal_compression(p);
    r.q = maximal_compression(q);
    r.certificate = homothety(r.p.core, r.q.core);
    if (r.certificate.has_value() != r.extremal)
        throw Error(ErrorCode::VerificationFailed,
                    std::string("homothetic cores ") + (r.certificate ? "found" : "absent") + " but pair is " +
                        (r.extremal ? "extremal" : "not extremal"));
    return r;
}

struct GraphBounds {
    Rational delta;
    Rational bonnesen_rhs;
    Rational area_sum;
    Rational containment_bound; // |P| + |Q| + m g(0) + n f(m)
    std::optional<Rational> slope_gap;
    std::optional<Rational> slope_gap_bound;
    Rational c_constant;                   // m(|P|/m^2 - |Q|/n^2)
    std::optional<bool> graph_identity;    // f(x) = (m/n) g((n/m) x) + C, when C >= 0
};

namespace detail {

inline BoundaryChains require_graph_body(const ConvexPolygon& p, const char* name)
{
    auto c = boundary_chains(p);
    bool flat = c.lower.size() == 2 && c.lower[0].y.is_zero() && c.lower[1].y.is_zero();
    if (!flat || c.lower[0].x == c.lower[1].x)
        throw Error(ErrorCode::HypothesisViolated, std::string(name) + " is not of the form {0 <= y <= f(x)}");
    return c;
}

} // namespace detail

/// Lower bounds for graph bodies {0 <= y <= f(x)}, {0 <= y <= g(x)}; each
/// is asserted against the exact area of the sum.
inline GraphBounds graph_body_bounds(const ConvexPolygon& p, const ConvexPolygon& q)
{
    auto cp = detail::require_graph_body(p, "P");
    auto cq = detail::require_graph_body(q, "Q");
    const Rational m = cp.upper.back().x - cp.upper.front().x;
    const Rational n = cq.upper.back().x - cq.upper.front().x;
    const Rational ap = area(p), aq = area(q);
    const Rational f_m = cp.upper.back().y, g_0 = cq.upper.front().y;

    GraphBounds g;
    g.area_sum = area(poly_minkowski_sum(p, q));
    g.bonnesen_rhs = bonnesen_rhs(ap, m, aq, n);
    g.delta = n * (f_m - ap / m) + m * (g_0 - aq / n);
    g.containment_bound = ap + aq + m * g_0 + n * f_m;

    auto sf = chain_slopes(cp.upper), sg = chain_slopes(cq.upper);
    Rational eps = *std::min_element(sf.begin(), sf.end()) - *std::max_element(sg.begin(), sg.end());
    if (eps.sign() >= 0) {
        g.slope_gap = eps;
        g.slope_gap_bound = g.bonnesen_rhs + m * n / 2 * eps;
    }

    g.c_constant = m * (ap / (m * m) - aq / (n * n));
    if (g.c_constant.sign() >= 0) {
        // Both sides are piecewise linear: agreement at the union of breakpoints suffices.
        const Rational x0 = cp.upper.front().x, y0 = cq.upper.front().x;
        std::vector<Rational> xs;
        for (const auto& pt : cp.upper)
            xs.push_back(pt.x - x0);
        for (const auto& pt : cq.upper)
            xs.push_back((pt.x - y0) * m / n);
        bool same = true;
        for (const auto& x : xs)
            same = same && eval_chain(cp.upper, x + x0) == m / n * eval_chain(cq.upper, x * n / m + y0) + g.c_constant;
        g.graph_identity = same;
    }

    auto check = [&](const Rational& bound, const char* what) {
        if (g.area_sum < bound)
            throw Error(ErrorCode::VerificationFailed, std::string("area of sum below ") + what);
    };
    check(g.bonnesen_rhs + g.delta, "bonnesen rhs + delta");
    check(g.containment_bound, "containment bound");
    if (g.slope_gap_bound)
        check(*g.slope_gap_bound, "slope-gap bound");
    return g;
}

/// Part of p with a <= x <= b.
inline ConvexPolygon clip_vertical(const ConvexPolygon& p, const Rational& a, const Rational& b)
{
    auto clip_half = [](const std::vector<Point2>& poly, const Rational& level, bool keep_right) {
        auto inside = [&](const Point2& pt) { return keep_right ? pt.x >= level : pt.x <= level; };
        std::vector<Point2> out;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Point2& s = poly[i];
            const Point2& e = poly[(i + 1) % poly.size()];
            if (inside(s))
                out.push_back(s);
            if (inside(s) != inside(e) && s.x != e.x) {
                Rational t = (level - s.x) / (e.x - s.x);
                out.push_back({level, s.y + t * (e.y - s.y)});
            }
        }
        return out;
    };
    auto pts = clip_half(clip_half(p.vertices(), a, true), b, false);
    if (pts.empty())
        throw Error(ErrorCode::InvalidSpec, "clip slab misses the polygon");
    return ConvexPolygon::hull(std::move(pts));
}

/// True iff every pair of matching equal-width vertical slabs is extremal.
inline bool partition_check(const ConvexPolygon& p, const ConvexPolygon& q, std::size_t k)
{
    if (k == 0)
        throw Error(ErrorCode::InvalidSpec, "partition needs k >= 1");
    if (!bonnesen_report(p, q).extremal)
        throw Error(ErrorCode::HypothesisViolated, "partition check requires an extremal pair");
    auto slab = [k](const ConvexPolygon& x, std::size_t i) {
        auto cx = boundary_chains(x);
        Rational lo = cx.lower.front().x, w = projection_length(x) / Rational(k);
        return clip_vertical(x, lo + w * Rational(i), lo + w * Rational(i + 1));
    };
    for (std::size_t i = 0; i < k; ++i)
        if (!bonnesen_report(slab(p, i), slab(q, i)).extremal)
            return false;
    return true;
}

/// Stretching p leaves extremality unchanged.
inline bool stretch_invariance_check(const ConvexPolygon& p, const ConvexPolygon& q, const Rational& h)
{
    return bonnesen_report(p, q).extremal == bonnesen_report(stretch_vertical(p, h), q).extremal;
}

} // namespace sumset

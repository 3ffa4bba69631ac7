#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sumset/error.hpp"
#include "sumset/rational.hpp"

namespace sumset {

struct Point2 {
    Rational x;
    Rational y;

    friend bool operator==(const Point2&, const Point2&) = default;
    friend std::strong_ordering operator<=>(const Point2&, const Point2&) = default;

    friend Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(const Rational& s, const Point2& p) { return {s * p.x, s * p.y}; }
    Point2 operator-() const { return {-x, -y}; }
};

/// z-component of the cross product of (a - o) and (b - o).
inline Rational cross(const Point2& o, const Point2& a, const Point2& b)
{
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline Rational cross(const Point2& u, const Point2& v) { return u.x * v.y - u.y * v.x; }

/// Finite set of planar points, kept sorted lexicographically by (x, y).
class PointSet2D {
public:
    PointSet2D() = default;

    explicit PointSet2D(std::vector<Point2> points) : points_(std::move(points))
    {
        std::sort(points_.begin(), points_.end());
        points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    }

    PointSet2D(std::initializer_list<Point2> points) : PointSet2D(std::vector<Point2>(points)) {}

    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }
    std::span<const Point2> points() const noexcept { return points_; }
    const Point2& operator[](std::size_t i) const { return points_[i]; }

    bool contains(const Point2& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

    friend bool operator==(const PointSet2D&, const PointSet2D&) = default;
    friend auto operator<=>(const PointSet2D& a, const PointSet2D& b)
    {
        return std::lexicographical_compare_three_way(a.points_.begin(), a.points_.end(), b.points_.begin(),
                                                      b.points_.end());
    }

private:
    std::vector<Point2> points_;
};

enum class Axis {
    Horizontal, ///< sections y = level
    Vertical,   ///< sections x = level
};

struct CoverStats {
    std::size_t vertical_line_count = 0;   // distinct x values
    std::size_t horizontal_line_count = 0; // distinct y values
    std::size_t max_horizontal_section = 0;
    std::size_t max_vertical_section = 0;
    bool is_two_dimensional = false;

    friend bool operator==(const CoverStats&, const CoverStats&) = default;
};

namespace detail {

inline void require_nonempty(const PointSet2D& x, const char* what)
{
    if (x.empty())
        throw Error(ErrorCode::EmptySet, std::string(what) + ": empty point set");
}

inline const Rational& coord(const Point2& p, Axis axis) { return axis == Axis::Horizontal ? p.y : p.x; }

} // namespace detail

inline bool is_collinear(const PointSet2D& x)
{
    if (x.size() <= 2)
        return true;
    const Point2& o = x[0];
    const Point2& a = x[x.size() - 1];
    for (const auto& p : x)
        if (!cross(o, a, p).is_zero())
            return false;
    return true;
}

/// Direction of the line through a collinear set with at least two points.
inline std::optional<Point2> line_direction(const PointSet2D& x)
{
    if (x.size() < 2)
        return std::nullopt;
    return x[x.size() - 1] - x[0];
}

inline PointSet2D minkowski_sum(const PointSet2D& a, const PointSet2D& b)
{
    detail::require_nonempty(a, "minkowski_sum");
    detail::require_nonempty(b, "minkowski_sum");
    std::vector<Point2> sums;
    sums.reserve(a.size() * b.size());
    for (const auto& p : a)
        for (const auto& q : b)
            sums.push_back(p + q);
    return PointSet2D(std::move(sums));
}

inline PointSet2D translate(const PointSet2D& x, const Point2& t)
{
    std::vector<Point2> out;
    out.reserve(x.size());
    for (const auto& p : x)
        out.push_back(p + t);
    return PointSet2D(std::move(out));
}

inline Point2 min_corner(const PointSet2D& x)
{
    detail::require_nonempty(x, "min_corner");
    Rational mx = x[0].x, my = x[0].y;
    for (const auto& p : x)
        my = min(my, p.y);
    return {mx, my};
}

/// Translate so that min x = min y = 0.
inline PointSet2D normalize_translation(const PointSet2D& x)
{
    if (x.empty())
        return x;
    return translate(x, -min_corner(x));
}

/// Sections keyed by level, each stored in canonical order.
inline std::map<Rational, std::vector<Point2>> sections_by_level(const PointSet2D& x, Axis axis)
{
    std::map<Rational, std::vector<Point2>> out;
    for (const auto& p : x)
        out[detail::coord(p, axis)].push_back(p);
    return out;
}

inline CoverStats cover_stats(const PointSet2D& x)
{
    detail::require_nonempty(x, "cover_stats");
    CoverStats s;
    // Points are sorted by x first, so vertical sections are contiguous runs.
    std::size_t run = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i == 0 || x[i].x != x[i - 1].x) {
            ++s.vertical_line_count;
            run = 0;
        }
        s.max_vertical_section = std::max(s.max_vertical_section, ++run);
    }
    std::vector<Rational> ys;
    ys.reserve(x.size());
    for (const auto& p : x)
        ys.push_back(p.y);
    std::sort(ys.begin(), ys.end());
    run = 0;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        if (i == 0 || ys[i] != ys[i - 1]) {
            ++s.horizontal_line_count;
            run = 0;
        }
        s.max_horizontal_section = std::max(s.max_horizontal_section, ++run);
    }
    s.is_two_dimensional = !is_collinear(x);
    return s;
}

inline PointSet2D section(const PointSet2D& x, Axis axis, const Rational& level)
{
    std::vector<Point2> out;
    for (const auto& p : x)
        if (detail::coord(p, axis) == level)
            out.push_back(p);
    return PointSet2D(std::move(out));
}

/// Invertible affine map p -> M p + t.
class AffineMap2D {
public:
    AffineMap2D() = default;

    static AffineMap2D identity() { return {}; }

    /// (x, y) -> (sx x, sy y)
    static AffineMap2D diagonal(const Rational& sx, const Rational& sy) { return make(sx, 0, 0, sy, 0, 0); }

    /// (x, y) -> (a x + g y, b y)
    static AffineMap2D upper_triangular(const Rational& a, const Rational& g, const Rational& b)
    {
        return make(a, g, 0, b, 0, 0);
    }

    static AffineMap2D translation(const Point2& t) { return make(1, 0, 0, 1, t.x, t.y); }

    static AffineMap2D make(const Rational& a11, const Rational& a12, const Rational& a21, const Rational& a22,
                            const Rational& tx, const Rational& ty)
    {
        AffineMap2D m;
        m.a11_ = a11;
        m.a12_ = a12;
        m.a21_ = a21;
        m.a22_ = a22;
        m.tx_ = tx;
        m.ty_ = ty;
        if (m.determinant().is_zero())
            throw Error(ErrorCode::SingularMap, "affine map has zero determinant");
        return m;
    }

    const Rational& a11() const { return a11_; }
    const Rational& a12() const { return a12_; }
    const Rational& a21() const { return a21_; }
    const Rational& a22() const { return a22_; }
    const Rational& tx() const { return tx_; }
    const Rational& ty() const { return ty_; }

    Rational determinant() const { return a11_ * a22_ - a12_ * a21_; }
    bool is_diagonal() const { return a12_.is_zero() && a21_.is_zero(); }
    bool is_upper_triangular() const { return a21_.is_zero(); }

    Point2 operator()(const Point2& p) const
    {
        return {a11_ * p.x + a12_ * p.y + tx_, a21_ * p.x + a22_ * p.y + ty_};
    }

    /// (this o inner)(p) = this(inner(p))
    AffineMap2D compose(const AffineMap2D& inner) const
    {
        return make(a11_ * inner.a11_ + a12_ * inner.a21_, a11_ * inner.a12_ + a12_ * inner.a22_,
                    a21_ * inner.a11_ + a22_ * inner.a21_, a21_ * inner.a12_ + a22_ * inner.a22_,
                    a11_ * inner.tx_ + a12_ * inner.ty_ + tx_, a21_ * inner.tx_ + a22_ * inner.ty_ + ty_);
    }

    AffineMap2D linear_part() const { return make(a11_, a12_, a21_, a22_, 0, 0); }

    friend bool operator==(const AffineMap2D&, const AffineMap2D&) = default;

private:
    Rational a11_ = 1, a12_ = 0, a21_ = 0, a22_ = 1, tx_ = 0, ty_ = 0;
};

inline PointSet2D apply_map(const PointSet2D& x, const AffineMap2D& m)
{
    std::vector<Point2> out;
    out.reserve(x.size());
    for (const auto& p : x)
        out.push_back(m(p));
    return PointSet2D(std::move(out));
}

/// Result of the arithmetic-progression test on a collinear set.
struct CommonDifference {
    /// Successive difference along the canonical order; absent for singletons.
    std::optional<Point2> difference;
};

/// Returns the constant successive difference of a collinear set, if any.
inline std::optional<CommonDifference> arithmetic_progression_of(const PointSet2D& x)
{
    detail::require_nonempty(x, "arithmetic_progression_of");
    if (!is_collinear(x))
        throw Error(ErrorCode::NotCollinear, "arithmetic_progression_of: points are not collinear");
    if (x.size() == 1)
        return CommonDifference{};
    Point2 delta = x[1] - x[0];
    for (std::size_t i = 2; i < x.size(); ++i)
        if (x[i] - x[i - 1] != delta)
            return std::nullopt;
    return CommonDifference{delta};
}

/// Difference of a sorted sequence of scalars if it is an arithmetic progression.
/// Sequences of length <= 1 yield an engaged optional holding nullopt.
inline std::optional<std::optional<Rational>> scalar_progression(std::span<const Rational> values)
{
    if (values.size() <= 1)
        return std::optional<Rational>{};
    Rational delta = values[1] - values[0];
    for (std::size_t i = 2; i < values.size(); ++i)
        if (values[i] - values[i - 1] != delta)
            return std::nullopt;
    return std::optional<Rational>{delta};
}

namespace detail {

inline std::vector<Rational> distinct_sorted(std::vector<Rational> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace detail

/// pi(X): distinct x-coordinates, sorted.
inline std::vector<Rational> x_values(const PointSet2D& x)
{
    std::vector<Rational> out;
    for (const auto& p : x)
        if (out.empty() || out.back() != p.x)
            out.push_back(p.x);
    return out;
}

/// pi'(X): distinct y-coordinates, sorted.
inline std::vector<Rational> y_values(const PointSet2D& x)
{
    std::vector<Rational> out;
    out.reserve(x.size());
    for (const auto& p : x)
        out.push_back(p.y);
    return detail::distinct_sorted(std::move(out));
}

} // namespace sumset

#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sumset/point_set.hpp"

namespace sumset {

/// T(m, h, c, d): columns x = 0..m-1, column x holds y = dx, dx+1, ..., cx+h-1.
struct TrapezoidSpec {
    std::size_t m = 1;
    std::size_t h = 1;
    Rational c;
    Rational d;

    friend bool operator==(const TrapezoidSpec&, const TrapezoidSpec&) = default;
};

/// Number of points in column x.
inline Rational column_size(const TrapezoidSpec& s, std::size_t x)
{
    return Rational(s.h) + (s.c - s.d) * Rational(x);
}

inline void validate(const TrapezoidSpec& s)
{
    if (s.m == 0 || s.h == 0)
        throw Error(ErrorCode::InvalidSpec, "trapezoid needs m >= 1 and h >= 1");
    if (!(s.c - s.d).is_integer())
        throw Error(ErrorCode::InvalidSpec, "trapezoid needs c - d integral");
    Rational mm(s.m - 1);
    if (Rational(s.h) - 1 + mm * s.c < mm * s.d)
        throw Error(ErrorCode::InvalidSpec, "trapezoid needs h - 1 + (m-1)c >= (m-1)d");
}

inline PointSet2D gen_trapezoid(const TrapezoidSpec& s)
{
    validate(s);
    std::vector<Point2> pts;
    for (std::size_t x = 0; x < s.m; ++x) {
        Rational rx(x);
        Rational base = s.d * rx;
        auto count = *column_size(s, x).to_int64();
        for (std::int64_t k = 0; k < count; ++k)
            pts.push_back({rx, base + Rational(k)});
    }
    return PointSet2D(std::move(pts));
}

/// Row-shift data on top of an integral standard trapezoid.
struct EpsilonSpec {
    TrapezoidSpec base;
    std::vector<std::int64_t> ones; // indices i with epsilon_i = 1, strictly increasing

    friend bool operator==(const EpsilonSpec&, const EpsilonSpec&) = default;
};

inline void validate(const EpsilonSpec& s)
{
    validate(s.base);
    auto c = s.base.c.to_int64(), d = s.base.d.to_int64();
    if (!c || !d || *c < 0 || *d < 0 || (*c == 0 && *d == 0))
        throw Error(ErrorCode::InvalidSpec, "epsilon trapezoid needs integers c, d >= 0, not both zero");
    const std::int64_t lo = static_cast<std::int64_t>(s.base.m) * *d;
    const std::int64_t hi = static_cast<std::int64_t>(s.base.h) - *c - 1;
    const std::int64_t gap = std::max(*c, *d);
    for (std::size_t i = 0; i < s.ones.size(); ++i) {
        if (s.ones[i] < lo || s.ones[i] > hi)
            throw Error(ErrorCode::InvalidSpec, "epsilon index " + std::to_string(s.ones[i]) + " outside [" +
                                                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
        if (i > 0 && s.ones[i] <= s.ones[i - 1])
            throw Error(ErrorCode::InvalidSpec, "epsilon indices must be strictly increasing");
        if (i > 0 && s.ones[i] - s.ones[i - 1] < gap)
            throw Error(ErrorCode::InvalidSpec, "two epsilon ones closer than max{c,d}");
    }
}

/// tau_epsilon(x, y) = (x + #{i <= y : epsilon_i = 1}, y).
inline PointSet2D gen_eps_trapezoid(const EpsilonSpec& s)
{
    validate(s);
    PointSet2D base = normalize_translation(gen_trapezoid(s.base));
    std::vector<Point2> out;
    out.reserve(base.size());
    for (const auto& p : base) {
        auto shift = std::upper_bound(s.ones.begin(), s.ones.end(), *p.y.to_int64()) - s.ones.begin();
        out.push_back({p.x + Rational(shift), p.y});
    }
    return PointSet2D(std::move(out));
}

struct CaseCSpec {
    std::int64_t m = 2;
    std::int64_t n = 2;
    std::int64_t k = 1; // odd

    friend bool operator==(const CaseCSpec&, const CaseCSpec&) = default;
};

inline void validate(const CaseCSpec& s)
{
    if (s.m < 2 || s.n < 2)
        throw Error(ErrorCode::InvalidSpec, "case (c) needs m, n >= 2");
    if (s.k < 1 || s.k % 2 == 0)
        throw Error(ErrorCode::InvalidSpec, "case (c) needs odd k >= 1");
}

/// A = {x >= 0, y >= 2x, y <= x + 2m + (k-5)/2, y <= 2x + 2m - 1},
/// B = {x >= 0, y >= 2x, y <= x + 2n - 2}.
inline std::pair<PointSet2D, PointSet2D> gen_case_c(const CaseCSpec& s)
{
    validate(s);
    std::vector<Point2> a, b;
    const std::int64_t ca = 2 * s.m + (s.k - 5) / 2;
    for (std::int64_t x = 0; 2 * x <= x + ca; ++x)
        for (std::int64_t y = 2 * x; y <= std::min(x + ca, 2 * x + 2 * s.m - 1); ++y)
            a.push_back({x, y});
    const std::int64_t cb = 2 * s.n - 2;
    for (std::int64_t x = 0; x <= cb; ++x)
        for (std::int64_t y = 2 * x; y <= x + cb; ++y)
            b.push_back({x, y});
    return {PointSet2D(std::move(a)), PointSet2D(std::move(b))};
}

/// Extremal pair with a single-point-wide A; x >= 4 is the free far point of B.
inline std::pair<PointSet2D, PointSet2D> gen_wild(const Rational& x)
{
    if (x < Rational(4))
        throw Error(ErrorCode::InvalidSpec, "wild pair needs x >= 4");
    PointSet2D a{{0, 0}, {0, 1}, {1, -1}};
    PointSet2D b{{0, 2}, {0, 1}, {0, 0}, {1, 0}, {1, -1}, {2, 0}, {2, -1}, {2, -2}, {x, 0}};
    return {a, b};
}

} // namespace sumset

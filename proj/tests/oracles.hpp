#pragma once

// Reference implementations on plain integer pairs. They share no code with
// the library beyond the standard library, so agreement is meaningful.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "sumset/point_set.hpp"

namespace oracle {

using IPoint = std::pair<std::int64_t, std::int64_t>;
using ISet = std::set<IPoint>;

inline ISet sum(const ISet& a, const ISet& b)
{
    ISet out;
    for (auto [ax, ay] : a)
        for (auto [bx, by] : b)
            out.insert({ax + bx, ay + by});
    return out;
}

inline std::size_t distinct_x(const ISet& s)
{
    std::set<std::int64_t> xs;
    for (auto [x, y] : s)
        xs.insert(x);
    return xs.size();
}

inline std::size_t max_row(const ISet& s)
{
    std::map<std::int64_t, std::size_t> rows;
    for (auto [x, y] : s)
        ++rows[y];
    std::size_t best = 0;
    for (auto [y, c] : rows)
        best = std::max(best, c);
    return best;
}

/// Cross-multiplied test of |A+B| == (|A|/m + |B|/n - 1)(m+n-1).
/// Returns lhs * m * n - (|A| n + |B| m - m n)(m + n - 1): zero iff equality.
inline std::int64_t gs_gap_scaled(std::size_t lhs, std::size_t a, std::size_t m, std::size_t b, std::size_t n)
{
    auto L = static_cast<std::int64_t>(lhs), A = static_cast<std::int64_t>(a), B = static_cast<std::int64_t>(b);
    auto M = static_cast<std::int64_t>(m), N = static_cast<std::int64_t>(n);
    return L * M * N - (A * N + B * M - M * N) * (M + N - 1);
}

inline bool collinear(const ISet& s)
{
    if (s.size() <= 2)
        return true;
    auto o = *s.begin(), e = *s.rbegin();
    for (auto p : s)
        if ((e.first - o.first) * (p.second - o.second) - (e.second - o.second) * (p.first - o.first) != 0)
            return false;
    return true;
}

inline ISet from_mask(std::uint32_t mask, int w, int h)
{
    ISet s;
    for (int i = 0; i < w * h; ++i)
        if (mask >> i & 1u)
            s.insert({i % w, i / w});
    return s;
}

inline ISet to_iset(const sumset::PointSet2D& x)
{
    ISet s;
    for (const auto& p : x)
        s.insert({*p.x.to_int64(), *p.y.to_int64()});
    return s;
}

inline sumset::PointSet2D to_pointset(const ISet& s)
{
    std::vector<sumset::Point2> v;
    for (auto [x, y] : s)
        v.push_back({x, y});
    return sumset::PointSet2D(std::move(v));
}

inline ISet random_set(std::mt19937_64& rng, int w, int h, double density = 0.4)
{
    std::bernoulli_distribution coin(density);
    ISet s;
    for (int x = 0; x < w; ++x)
        for (int y = 0; y < h; ++y)
            if (coin(rng))
                s.insert({x, y});
    if (s.empty())
        s.insert({std::uniform_int_distribution<int>(0, w - 1)(rng), std::uniform_int_distribution<int>(0, h - 1)(rng)});
    return s;
}

} // namespace oracle

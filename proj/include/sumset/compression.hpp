#pragma once

#include <map>
#include <vector>

#include "sumset/point_set.hpp"

namespace sumset {

/// Each horizontal row of size k becomes {(0, y), ..., (k-1, y)}.
inline PointSet2D compress(const PointSet2D& x)
{
    detail::require_nonempty(x, "compress");
    std::map<Rational, std::size_t> rows;
    for (const auto& p : x)
        ++rows[p.y];
    std::vector<Point2> out;
    out.reserve(x.size());
    for (const auto& [y, count] : rows)
        for (std::size_t i = 0; i < count; ++i)
            out.push_back({Rational(i), y});
    return PointSet2D(std::move(out));
}

/// (|A+B|, sum_t max|A_i+B_j|, sum_t max(|A_i|+|B_j|-1), |c(A)+c(B)|) over
/// horizontal levels i + j = t. Terms are non-increasing; the last two agree.
inline std::vector<Rational> compression_chain(const PointSet2D& a, const PointSet2D& b)
{
    detail::require_nonempty(a, "compression_chain");
    detail::require_nonempty(b, "compression_chain");
    auto ra = sections_by_level(a, Axis::Horizontal);
    auto rb = sections_by_level(b, Axis::Horizontal);

    // Row sums within one level pair are one-dimensional: only x varies.
    auto row_sum_size = [](const std::vector<Point2>& p, const std::vector<Point2>& q) {
        std::vector<Rational> xs;
        xs.reserve(p.size() * q.size());
        for (const auto& u : p)
            for (const auto& v : q)
                xs.push_back(u.x + v.x);
        return detail::distinct_sorted(std::move(xs)).size();
    };

    std::map<Rational, std::size_t> best_sum, best_card;
    for (const auto& [i, ai] : ra)
        for (const auto& [j, bj] : rb) {
            auto& bs = best_sum[i + j];
            bs = std::max(bs, row_sum_size(ai, bj));
            auto& bc = best_card[i + j];
            bc = std::max(bc, ai.size() + bj.size() - 1);
        }
    Rational second, third;
    for (const auto& [t, v] : best_sum)
        second += Rational(v);
    for (const auto& [t, v] : best_card)
        third += Rational(v);
    return {Rational(minkowski_sum(a, b).size()), second, third,
            Rational(minkowski_sum(compress(a), compress(b)).size())};
}

} // namespace sumset

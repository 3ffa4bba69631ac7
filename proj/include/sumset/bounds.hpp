#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "sumset/point_set.hpp"

namespace sumset {

enum class BoundMode {
    LinesGS,        ///< m, n = number of vertical lines covering A, B
    SectionsGS,     ///< m, n = largest horizontal section of A, B
    Doubling,       ///< B = A, m = number of vertical lines
    OneDimensional, ///< both sets on parallel lines: |A+B| >= |A|+|B|-1
};

inline const char* to_string(BoundMode mode)
{
    switch (mode) {
    case BoundMode::LinesGS: return "LinesGS";
    case BoundMode::SectionsGS: return "SectionsGS";
    case BoundMode::Doubling: return "Doubling";
    case BoundMode::OneDimensional: return "OneDimensional";
    }
    return "?";
}

/// Accepts the canonical names and the short CLI spellings.
inline BoundMode parse_bound_mode(const std::string& text)
{
    if (text == "LinesGS" || text == "lines")
        return BoundMode::LinesGS;
    if (text == "SectionsGS" || text == "sections")
        return BoundMode::SectionsGS;
    if (text == "Doubling" || text == "doubling")
        return BoundMode::Doubling;
    if (text == "OneDimensional" || text == "1d" || text == "one-dimensional")
        return BoundMode::OneDimensional;
    throw Error(ErrorCode::ParseError, "unknown bound mode '" + text + "'");
}

struct BoundReport {
    BoundMode mode{};
    std::size_t m = 0;
    std::size_t n = 0;
    Rational lhs; // |A+B|
    Rational rhs;
    Rational gap; // lhs - rhs
    bool extremal = false;
};

/// Both sets lie on lines parallel to each other (singletons fit any line).
inline bool on_parallel_lines(const PointSet2D& a, const PointSet2D& b)
{
    if (!is_collinear(a) || !is_collinear(b))
        return false;
    auto da = line_direction(a), db = line_direction(b);
    if (!da || !db)
        return true;
    return cross(*da, *db).is_zero();
}

/// (|A|/m + |B|/n - 1)(m + n - 1)
inline Rational gs_rhs(std::size_t size_a, std::size_t m, std::size_t size_b, std::size_t n)
{
    Rational rm(m), rn(n);
    return (Rational(size_a) / rm + Rational(size_b) / rn - 1) * (rm + rn - 1);
}

namespace detail {

inline BoundReport finish_report(BoundMode mode, std::size_t m, std::size_t n, std::size_t lhs, Rational rhs)
{
    BoundReport r;
    r.mode = mode;
    r.m = m;
    r.n = n;
    r.lhs = Rational(lhs);
    r.rhs = std::move(rhs);
    r.gap = r.lhs - r.rhs;
    r.extremal = r.gap.is_zero();
    return r;
}

} // namespace detail

/// Bound report from precomputed statistics; `sumset_size` is |A+B|.
inline BoundReport bound_from_stats(BoundMode mode, std::size_t size_a, const CoverStats& sa, std::size_t size_b,
                                    const CoverStats& sb, std::size_t sumset_size)
{
    switch (mode) {
    case BoundMode::LinesGS:
        return detail::finish_report(mode, sa.vertical_line_count, sb.vertical_line_count, sumset_size,
                                     gs_rhs(size_a, sa.vertical_line_count, size_b, sb.vertical_line_count));
    case BoundMode::SectionsGS:
        return detail::finish_report(mode, sa.max_horizontal_section, sb.max_horizontal_section, sumset_size,
                                     gs_rhs(size_a, sa.max_horizontal_section, size_b, sb.max_horizontal_section));
    case BoundMode::Doubling: {
        Rational m(sa.vertical_line_count);
        Rational rhs = (Rational(2) * Rational(size_a) / m - 1) * (Rational(2) * m - 1);
        return detail::finish_report(mode, sa.vertical_line_count, sa.vertical_line_count, sumset_size, rhs);
    }
    case BoundMode::OneDimensional:
        return detail::finish_report(mode, 1, 1, sumset_size, Rational(size_a) + Rational(size_b) - 1);
    }
    throw Error(ErrorCode::ModeMismatch, "unknown mode");
}

inline void check_mode_preconditions(BoundMode mode, const PointSet2D& a, const PointSet2D& b)
{
    if (mode == BoundMode::Doubling && a != b)
        throw Error(ErrorCode::ModeMismatch, "Doubling mode requires B = A");
    if (mode == BoundMode::OneDimensional && !on_parallel_lines(a, b))
        throw Error(ErrorCode::ModeMismatch, "OneDimensional mode requires both sets on parallel lines");
}

inline BoundReport bound(BoundMode mode, const PointSet2D& a, const PointSet2D& b)
{
    detail::require_nonempty(a, "bound");
    detail::require_nonempty(b, "bound");
    check_mode_preconditions(mode, a, b);
    return bound_from_stats(mode, a.size(), cover_stats(a), b.size(), cover_stats(b), minkowski_sum(a, b).size());
}

/// (4 - 2/(m+1))|A| - (2m+1). Diagnostic evaluation only; no covering claim.
inline Rational freiman_threshold_rhs(std::size_t cardinality, std::size_t m)
{
    Rational rm(m);
    return (Rational(4) - Rational(2) / (rm + 1)) * Rational(cardinality) - (Rational(2) * rm + 1);
}

/// Non-negative values on a finite set of rational indices.
class SupportedSequence {
public:
    SupportedSequence() = default;

    explicit SupportedSequence(std::map<Rational, Rational> entries) : entries_(std::move(entries))
    {
        for (const auto& [i, v] : entries_)
            if (v.sign() < 0)
                throw Error(ErrorCode::InvalidSpec, "sequence values must be non-negative");
    }

    /// Values on indices 0, 1, ..., k-1.
    static SupportedSequence consecutive(const std::vector<Rational>& values)
    {
        std::map<Rational, Rational> e;
        for (std::size_t i = 0; i < values.size(); ++i)
            e.emplace(Rational(i), values[i]);
        return SupportedSequence(std::move(e));
    }

    const std::map<Rational, Rational>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    Rational mean() const
    {
        Rational s;
        for (const auto& [i, v] : entries_)
            s += v;
        return s / Rational(entries_.size());
    }

    std::vector<Rational> indices() const
    {
        std::vector<Rational> out;
        for (const auto& [i, v] : entries_)
            out.push_back(i);
        return out;
    }

    std::vector<Rational> values() const
    {
        std::vector<Rational> out;
        for (const auto& [i, v] : entries_)
            out.push_back(v);
        return out;
    }

private:
    std::map<Rational, Rational> entries_;
};

/// u_t = max{a_i + b_{t-i}} over the representations t = i + j.
inline std::map<Rational, Rational> u_values(const SupportedSequence& a, const SupportedSequence& b)
{
    if (a.empty() || b.empty())
        throw Error(ErrorCode::EmptySet, "u_values: empty sequence");
    std::map<Rational, Rational> u;
    for (const auto& [i, ai] : a.entries())
        for (const auto& [j, bj] : b.entries()) {
            Rational v = ai + bj;
            auto [it, inserted] = u.emplace(i + j, v);
            if (!inserted && it->second < v)
                it->second = v;
        }
    return u;
}

struct AveragingReport {
    std::map<Rational, Rational> u_values;
    Rational u_plus_mean; // mean of the |I|+|J|-1 largest u_t
    Rational full_mean;   // sum of all u_t over (|I|+|J|-1)
    Rational rhs;         // mean(a) + mean(b)
    bool equality = false;
    bool ap_condition = false;
};

namespace detail {

/// Sequences (each of length >= 1) that are arithmetic progressions sharing one
/// difference; sequences of length 1 place no constraint on the difference.
inline bool common_progression(const std::vector<Rational>& p, const std::vector<Rational>& q)
{
    auto dp = scalar_progression(p);
    auto dq = scalar_progression(q);
    if (!dp || !dq)
        return false;
    if (*dp && *dq)
        return **dp == **dq;
    return true;
}

} // namespace detail

inline AveragingReport averaging_report(const SupportedSequence& a, const SupportedSequence& b)
{
    AveragingReport r;
    r.u_values = u_values(a, b);
    const std::size_t k = a.size() + b.size() - 1;

    std::vector<std::pair<Rational, Rational>> ranked; // (u_t, t)
    Rational total;
    for (const auto& [t, u] : r.u_values) {
        ranked.emplace_back(u, t);
        total += u;
    }
    // Largest first; ties broken towards larger t.
    std::sort(ranked.begin(), ranked.end(), [](const auto& l, const auto& rr) { return l > rr; });
    Rational top;
    for (std::size_t i = 0; i < k && i < ranked.size(); ++i)
        top += ranked[i].first;

    r.u_plus_mean = top / Rational(k);
    r.full_mean = total / Rational(k);
    r.rhs = a.mean() + b.mean();
    r.equality = r.full_mean == r.rhs;
    r.ap_condition =
        detail::common_progression(a.indices(), b.indices()) && detail::common_progression(a.values(), b.values());
    return r;
}

/// The four-term chain over vertical sections:
/// |A+B| >= sum_t max|A_i + B_{t-i}| >= sum_t max(|A_i|+|B_{t-i}|-1) >= LinesGS rhs.
inline std::vector<Rational> chain_diagnostic(const PointSet2D& a, const PointSet2D& b)
{
    detail::require_nonempty(a, "chain_diagnostic");
    detail::require_nonempty(b, "chain_diagnostic");
    auto sa = sections_by_level(a, Axis::Vertical);
    auto sb = sections_by_level(b, Axis::Vertical);

    std::map<Rational, std::size_t> best_sum, best_card;
    for (const auto& [i, ai] : sa)
        for (const auto& [j, bj] : sb) {
            std::size_t s = minkowski_sum(PointSet2D(ai), PointSet2D(bj)).size();
            std::size_t c = ai.size() + bj.size() - 1;
            auto& bs = best_sum[i + j];
            bs = std::max(bs, s);
            auto& bc = best_card[i + j];
            bc = std::max(bc, c);
        }
    Rational second, third;
    for (const auto& [t, v] : best_sum)
        second += Rational(v);
    for (const auto& [t, v] : best_card)
        third += Rational(v);
    return {Rational(minkowski_sum(a, b).size()), second, third,
            gs_rhs(a.size(), sa.size(), b.size(), sb.size())};
}

} // namespace sumset

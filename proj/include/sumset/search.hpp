#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "sumset/bounds.hpp"
#include "sumset/classify.hpp"
#include "sumset/compression.hpp"

namespace sumset {

struct SweepConfig {
    std::size_t width_a = 3, height_a = 3;
    std::size_t width_b = 3, height_b = 3;
    std::optional<std::size_t> max_size_a, max_size_b;
    BoundMode mode = BoundMode::LinesGS;
    bool require_two_dimensional = false;
    std::size_t min_mn = 1; // skip pairs whose mode-specific m or n is smaller
    bool dedup_translations = false; // keep only subsets touching both axes
    std::size_t shard_index = 0;
    std::size_t shard_count = 1;
};

struct PairRecord {
    PointSet2D a;
    PointSet2D b;
    std::string reason;

    friend bool operator==(const PairRecord&, const PairRecord&) = default;
    friend auto operator<=>(const PairRecord& l, const PairRecord& r)
    {
        if (auto c = l.a <=> r.a; c != 0)
            return c;
        if (auto c = l.b <=> r.b; c != 0)
            return c;
        return l.reason <=> r.reason;
    }
};

struct SweepReport {
    std::uint64_t pairs_checked = 0;
    std::vector<PairRecord> violations;
    std::uint64_t extremal_count = 0;
    std::map<std::string, std::uint64_t> classified_tally;
    std::vector<PairRecord> unclassified;
    std::uint64_t wild_regime_count = 0;

    bool ok() const { return violations.empty() && unclassified.empty(); }
    friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

namespace detail {

struct GridSubset {
    PointSet2D set;
    CoverStats stats;
};

inline std::vector<GridSubset> grid_subsets(std::size_t w, std::size_t h, std::optional<std::size_t> cap, bool dedup)
{
    const std::size_t cells = w * h;
    if (cells == 0 || cells > 20)
        throw Error(ErrorCode::InvalidSpec, "sweep grid must have between 1 and 20 cells");
    std::vector<GridSubset> out;
    for (std::uint32_t mask = 1; mask < (1u << cells); ++mask) {
        auto bits = static_cast<std::size_t>(__builtin_popcount(mask));
        if (cap && bits > *cap)
            continue;
        std::vector<Point2> pts;
        for (std::size_t i = 0; i < cells; ++i)
            if (mask >> i & 1u)
                pts.push_back({static_cast<std::int64_t>(i % w), static_cast<std::int64_t>(i / w)});
        PointSet2D s(std::move(pts));
        if (dedup && min_corner(s) != Point2{0, 0})
            continue;
        auto st = cover_stats(s);
        out.push_back({std::move(s), st});
    }
    return out;
}

inline std::pair<std::size_t, std::size_t> mode_mn(BoundMode mode, const CoverStats& a, const CoverStats& b)
{
    switch (mode) {
    case BoundMode::LinesGS:
    case BoundMode::Doubling: return {a.vertical_line_count, b.vertical_line_count};
    case BoundMode::SectionsGS: return {a.max_horizontal_section, b.max_horizontal_section};
    case BoundMode::OneDimensional: return {1, 1};
    }
    return {1, 1};
}

inline void tally(SweepReport& r, const std::string& key) { ++r.classified_tally[key]; }

/// Routes one pair that has already been bound-checked.
inline void route_pair(SweepReport& r, const SweepConfig& cfg, const GridSubset& a, const GridSubset& b,
                       const BoundReport& rep)
{
    const bool two_d = a.stats.is_two_dimensional && b.stats.is_two_dimensional;
    const bool parallel = !a.stats.is_two_dimensional && !b.stats.is_two_dimensional && on_parallel_lines(a.set, b.set);

    if (parallel && (rep.extremal || cfg.mode == BoundMode::OneDimensional)) {
        auto c = classify_1d(a.set, b.set);
        if (c.one_dimensional->equality != c.one_dimensional->cdt_condition)
            r.unclassified.push_back({a.set, b.set, "one-dimensional equality disagrees with the AP condition"});
        tally(r, c.one_dimensional->equality ? "OneDimensionalEquality" : "OneDimensionalStrict");
        return;
    }
    if (!rep.extremal)
        return;
    if (!two_d) {
        tally(r, "OutsideHypotheses");
        return;
    }
    if (cfg.mode == BoundMode::SectionsGS) {
        if (a.stats.max_horizontal_section < 2 || b.stats.max_horizontal_section < 2) {
            ++r.wild_regime_count;
            tally(r, "WildRegime");
            return;
        }
        auto c = classify_thm3(a.set, b.set);
        tally(r, to_string(c.verdict));
        if (c.verdict == Verdict::ExtremalUnclassified)
            r.unclassified.push_back({a.set, b.set, "no family (a)/(b)/(c) matches"});
        else if (!split_check(a.set, b.set))
            r.unclassified.push_back({a.set, b.set, "split halves not extremal"});
        return;
    }
    auto c = classify_thm2(a.set, b.set);
    tally(r, to_string(c.verdict));
    if (c.verdict != Verdict::TrapezoidPair)
        r.unclassified.push_back({a.set, b.set, "not a standard trapezoid pair"});
}

} // namespace detail

/// Exhaustive enumeration of subset pairs of the two grids, restricted to this shard.
inline SweepReport sweep(const SweepConfig& cfg)
{
    if (cfg.shard_count == 0 || cfg.shard_index >= cfg.shard_count)
        throw Error(ErrorCode::InvalidSpec, "shard index must be below shard count");
    auto as = detail::grid_subsets(cfg.width_a, cfg.height_a, cfg.max_size_a, cfg.dedup_translations);
    auto bs = cfg.mode == BoundMode::Doubling
                  ? as
                  : detail::grid_subsets(cfg.width_b, cfg.height_b, cfg.max_size_b, cfg.dedup_translations);

    SweepReport r;
    std::uint64_t index = 0;
    auto visit = [&](const detail::GridSubset& a, const detail::GridSubset& b) {
        if (index++ % cfg.shard_count != cfg.shard_index)
            return;
        if (cfg.require_two_dimensional && !(a.stats.is_two_dimensional && b.stats.is_two_dimensional))
            return;
        if (cfg.mode == BoundMode::OneDimensional &&
            (a.stats.is_two_dimensional || b.stats.is_two_dimensional || !on_parallel_lines(a.set, b.set)))
            return;
        auto [m, n] = detail::mode_mn(cfg.mode, a.stats, b.stats);
        if (m < cfg.min_mn || n < cfg.min_mn)
            return;
        ++r.pairs_checked;
        auto rep = bound_from_stats(cfg.mode, a.set.size(), a.stats, b.set.size(), b.stats,
                                    minkowski_sum(a.set, b.set).size());
        if (rep.gap.sign() < 0) {
            r.violations.push_back({a.set, b.set, "lhs " + rep.lhs.str() + " below rhs " + rep.rhs.str()});
            return;
        }
        if (rep.extremal)
            ++r.extremal_count;
        detail::route_pair(r, cfg, a, b, rep);
    };
    if (cfg.mode == BoundMode::Doubling) {
        for (const auto& a : as)
            visit(a, a);
    }
    else {
        for (const auto& a : as)
            for (const auto& b : bs)
                visit(a, b);
    }
    std::sort(r.violations.begin(), r.violations.end());
    std::sort(r.unclassified.begin(), r.unclassified.end());
    return r;
}

/// Associative, commutative combination of shard reports.
inline SweepReport merge(const std::vector<SweepReport>& parts)
{
    SweepReport r;
    for (const auto& p : parts) {
        r.pairs_checked += p.pairs_checked;
        r.extremal_count += p.extremal_count;
        r.wild_regime_count += p.wild_regime_count;
        for (const auto& [k, v] : p.classified_tally)
            r.classified_tally[k] += v;
        r.violations.insert(r.violations.end(), p.violations.begin(), p.violations.end());
        r.unclassified.insert(r.unclassified.end(), p.unclassified.begin(), p.unclassified.end());
    }
    std::sort(r.violations.begin(), r.violations.end());
    std::sort(r.unclassified.begin(), r.unclassified.end());
    return r;
}

/// Runs `jobs` shards on separate threads and merges them.
inline SweepReport sweep_parallel(SweepConfig cfg, std::size_t jobs)
{
    if (jobs <= 1)
        return sweep(cfg);
    std::vector<SweepReport> parts(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> threads;
    for (std::size_t j = 0; j < jobs; ++j)
        threads.emplace_back([&, j] {
            try {
                SweepConfig c = cfg;
                c.shard_index = j;
                c.shard_count = jobs;
                parts[j] = sweep(c);
            }
            catch (...) {
                errors[j] = std::current_exception();
            }
        });
    for (auto& t : threads)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return merge(parts);
}

struct PairDiagnostic {
    std::size_t sumset_size = 0;
    std::vector<BoundReport> bounds; // every mode whose preconditions hold
    std::vector<Rational> compression_chain;
    std::vector<Rational> chain_diagnostic;
    std::optional<Classification> thm2;
    std::optional<Classification> thm3;
    std::optional<Classification> one_dimensional;
    std::optional<bool> split;
    std::vector<std::string> skipped; // constituent checks whose hypotheses failed
};

inline PairDiagnostic oracle_pair_check(const PointSet2D& a, const PointSet2D& b)
{
    PairDiagnostic d;
    d.sumset_size = minkowski_sum(a, b).size();
    for (auto mode : {BoundMode::LinesGS, BoundMode::SectionsGS, BoundMode::Doubling, BoundMode::OneDimensional}) {
        try {
            d.bounds.push_back(bound(mode, a, b));
        }
        catch (const Error& e) {
            d.skipped.push_back(std::string(to_string(mode)) + ": " + e.what());
        }
    }
    d.compression_chain = compression_chain(a, b);
    d.chain_diagnostic = chain_diagnostic(a, b);
    auto attempt = [&](const char* name, auto&& fn) {
        try {
            fn();
        }
        catch (const Error& e) {
            d.skipped.push_back(std::string(name) + ": " + e.what());
        }
    };
    attempt("thm2", [&] { d.thm2 = classify_thm2(a, b); });
    attempt("thm3", [&] { d.thm3 = classify_thm3(a, b); });
    attempt("1d", [&] { d.one_dimensional = classify_1d(a, b); });
    attempt("split", [&] { d.split = split_check(a, b); });
    return d;
}

} // namespace sumset

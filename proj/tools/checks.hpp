#pragma once

// Executable forms of the acceptance criteria and of the randomized property
// suites. Each check returns ok plus a one-line summary of what it counted.

#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "sumset/sumset.hpp"

namespace sumset::checks {

struct Result {
    bool ok = true;
    std::string detail;
    std::uint64_t cases = 0;
};

namespace detail {

/// Plain double loop into a std::set, independent of minkowski_sum.
inline std::size_t brute_sumset_size(const PointSet2D& a, const PointSet2D& b)
{
    std::set<Point2> s;
    for (const auto& p : a)
        for (const auto& q : b)
            s.insert(p + q);
    return s.size();
}

inline void fail(Result& r, const std::string& why)
{
    if (r.ok)
        r.detail = why;
    r.ok = false;
}

inline Rational pick(std::mt19937_64& rng, std::initializer_list<Rational> choices)
{
    std::uniform_int_distribution<std::size_t> d(0, choices.size() - 1);
    return *(choices.begin() + d(rng));
}

inline Rational small_rational(std::mt19937_64& rng, int lo, int hi, int max_den)
{
    std::uniform_int_distribution<int> num(lo, hi), den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline Json run(const std::vector<std::string>& args, const std::string& input, int& code)
{
    std::istringstream in(input);
    std::ostringstream out, err;
    code = run_cli(args, in, out, err);
    return code == 0 ? Json::parse(out.str()) : Json();
}

} // namespace detail

// ------------------------------------------------------------- criteria

/// Wild pair through the CLI pipeline, x = 4..8.
inline Result wild_pipeline()
{
    Result r;
    for (int x = 4; x <= 8; ++x) {
        int code = 0;
        Json g = detail::run({"gen", "wild", "--x", std::to_string(x)}, "", code);
        if (code != 0) {
            detail::fail(r, "gen wild failed for x=" + std::to_string(x));
            continue;
        }
        Json b = detail::run({"bound", "--mode", "sections"}, g.dump(), code);
        bool ok = code == 0 && b["lhs"] == "17" && b["rhs"] == "17" && b["extremal"] == true && b["m"] == 1 &&
                  b["n"] == 4 && b["size_a"] == 3 && b["size_b"] == 9;
        if (!ok)
            detail::fail(r, "x=" + std::to_string(x) + ": " + b.dump());
        ++r.cases;
    }
    if (r.ok)
        r.detail = "x=4..8: m=1 n=4 |A|=3 |B|=9 lhs=rhs=17";
    return r;
}

/// All valid T(m,h,c,d), T(n,h',c,d) with m,n <= 4, h,h' <= 6, c,d in [-2,2] step 1/2.
inline Result trapezoid_sweep()
{
    Result r;
    std::uint64_t invalid = 0;
    for (int c2 = -4; c2 <= 4; ++c2)
        for (int d2 = -4; d2 <= 4; ++d2) {
            Rational c(c2, 2), d(d2, 2);
            std::vector<std::pair<TrapezoidSpec, PointSet2D>> members;
            for (std::size_t m = 1; m <= 4; ++m)
                for (std::size_t h = 1; h <= 6; ++h) {
                    TrapezoidSpec s{m, h, c, d};
                    try {
                        validate(s);
                    }
                    catch (const Error&) {
                        ++invalid;
                        continue;
                    }
                    members.emplace_back(s, gen_trapezoid(s));
                }
            for (const auto& [s, a] : members)
                for (const auto& [t, b] : members) {
                    ++r.cases;
                    auto rep = bound(BoundMode::LinesGS, a, b);
                    if (!rep.extremal || rep.m != s.m || rep.n != t.m)
                        detail::fail(r, "T(" + std::to_string(s.m) + "," + std::to_string(s.h) + "," + c.str() + "," +
                                            d.str() + ") with n=" + std::to_string(t.m) + " h'=" + std::to_string(t.h) +
                                            " gap " + rep.gap.str());
                }
        }
    if (r.ok)
        r.detail = std::to_string(r.cases) + " valid pairs all LinesGS-extremal (" + std::to_string(invalid) +
                   " invalid specs skipped)";
    return r;
}

inline Result sections_instance(const PointSet2D& a, const PointSet2D& b, std::size_t size_a, std::size_t size_b,
                                Verdict want)
{
    Result r;
    r.cases = 1;
    auto rep = bound(BoundMode::SectionsGS, a, b);
    const std::size_t oracle = detail::brute_sumset_size(a, b);
    if (a.size() != size_a || b.size() != size_b)
        detail::fail(r, "sizes " + std::to_string(a.size()) + "/" + std::to_string(b.size()));
    if (rep.rhs != 133 || rep.lhs != Rational(oracle) || !rep.extremal)
        detail::fail(r, "rhs " + rep.rhs.str() + " lhs " + rep.lhs.str() + " oracle " + std::to_string(oracle));
    auto c = classify_thm3(a, b);
    if (c.verdict != want)
        detail::fail(r, std::string("verdict ") + to_string(c.verdict));
    if (r.ok)
        r.detail = "|A|=" + std::to_string(size_a) + " |B|=" + std::to_string(size_b) + " rhs=133 lhs(oracle)=" +
                   std::to_string(oracle) + " verdict " + to_string(c.verdict);
    return r;
}

inline Result figure2()
{
    return sections_instance(gen_eps_trapezoid({{4, 16, 1, 2}, {8, 12, 14}}), gen_trapezoid({4, 7, 1, 2}), 58, 22,
                             Verdict::EpsTrapezoidPair);
}

inline Result figure3()
{
    auto [a, b] = gen_case_c({4, 4, 7});
    return sections_instance(a, b, 52, 28, Verdict::CaseCPair);
}

/// 3x3 sweeps in both modes, plus a 4-shard run that must merge to the same report.
inline Result grid_sweeps(bool with_shards = true)
{
    Result r;
    std::ostringstream d;
    for (auto mode : {BoundMode::LinesGS, BoundMode::SectionsGS}) {
        SweepConfig cfg;
        cfg.mode = mode;
        auto rep = sweep(cfg);
        r.cases += rep.pairs_checked;
        if (!rep.violations.empty())
            detail::fail(r, std::string(to_string(mode)) + ": " + std::to_string(rep.violations.size()) + " violations");
        if (!rep.unclassified.empty())
            detail::fail(r, std::string(to_string(mode)) + ": " + std::to_string(rep.unclassified.size()) +
                                " unclassified, first " + rep.unclassified.front().reason);
        d << to_string(mode) << " " << rep.pairs_checked << " pairs, " << rep.extremal_count << " extremal";
        for (const auto& [k, v] : rep.classified_tally)
            d << " " << k << "=" << v;
        if (with_shards) {
            std::vector<SweepReport> parts;
            for (std::size_t i = 0; i < 4; ++i) {
                SweepConfig c = cfg;
                c.shard_index = i;
                c.shard_count = 4;
                parts.push_back(sweep(c));
            }
            if (!(merge(parts) == rep))
                detail::fail(r, std::string(to_string(mode)) + ": 4-shard merge differs");
            else
                d << " (4 shards agree)";
        }
        d << "; ";
    }
    if (r.ok)
        r.detail = d.str();
    return r;
}

/// Averaging inequality over all index sets in {0,1,2,3} and values in {1,..,4}.
inline Result averaging_bruteforce()
{
    Result r;
    std::vector<SupportedSequence> seqs;
    for (unsigned mask = 1; mask < 16; ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < 4; ++i)
            if (mask >> i & 1u)
                idx.push_back(i);
        std::size_t combos = 1;
        for (std::size_t i = 0; i < idx.size(); ++i)
            combos *= 4;
        for (std::size_t code = 0; code < combos; ++code) {
            std::map<Rational, Rational> e;
            std::size_t c = code;
            for (int i : idx) {
                e[Rational(i)] = Rational(static_cast<std::int64_t>(c % 4 + 1));
                c /= 4;
            }
            seqs.emplace_back(std::move(e));
        }
    }
    std::uint64_t eq_cases = 0, eq_hits = 0;
    for (const auto& a : seqs)
        for (const auto& b : seqs) {
            ++r.cases;
            auto rep = averaging_report(a, b);
            if (rep.u_plus_mean < rep.rhs || rep.full_mean < rep.u_plus_mean)
                detail::fail(r, "inequality fails");
            if (std::min(a.size(), b.size()) >= 2) {
                ++eq_cases;
                eq_hits += rep.equality;
                if (rep.equality != rep.ap_condition)
                    detail::fail(r, "equality/AP mismatch");
            }
        }
    if (r.ok)
        r.detail = std::to_string(r.cases) + " pairs; " + std::to_string(eq_cases) +
                   " with min(|I|,|J|)>=2, equality exactly on the " + std::to_string(eq_hits) + " AP pairs";
    return r;
}

/// Every subset pair of {0,...,6}.
inline Result one_dimensional_bruteforce()
{
    Result r;
    std::vector<PointSet2D> subsets;
    for (unsigned mask = 1; mask < 128; ++mask) {
        std::vector<Point2> pts;
        for (int i = 0; i < 7; ++i)
            if (mask >> i & 1u)
                pts.push_back({i, 0});
        subsets.emplace_back(std::move(pts));
    }
    std::uint64_t equal = 0;
    for (const auto& a : subsets)
        for (const auto& b : subsets) {
            ++r.cases;
            auto c = classify_1d(a, b);
            const auto& o = *c.one_dimensional;
            if (c.report.gap.sign() < 0)
                detail::fail(r, "bound violated");
            if (o.equality != o.cdt_condition)
                detail::fail(r, "equality does not match the AP condition");
            equal += o.equality;
        }
    if (r.ok)
        r.detail = std::to_string(r.cases) + " pairs, " + std::to_string(equal) + " equality cases, all matching";
    return r;
}

/// Random stretched homothets, perturbations, and the lemma suite on each.
inline Result continuous_suite(std::uint64_t seed = 2024)
{
    Result r;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(0, 6);
    auto core = [&](int i) {
        if (i % 7 == 3) // segment core: the stretched body is a parallelogram
            return ConvexPolygon::hull({{0, 0}, {coord(rng) + 1, coord(rng) - 3}});
        for (;;) {
            std::vector<Point2> pts;
            for (int k = 0; k < 5; ++k)
                pts.push_back({coord(rng), coord(rng)});
            auto h = ConvexPolygon::hull(pts);
            if (!h.is_degenerate())
                return h;
        }
    };
    auto scaled = [](const ConvexPolygon& k, const Rational& lambda, const Point2& t) {
        std::vector<Point2> v;
        for (const auto& p : k.vertices())
            v.push_back(lambda * p + t);
        return ConvexPolygon::hull(v);
    };
    auto point = [&] { return Point2{detail::small_rational(rng, -5, 5, 3), detail::small_rational(rng, -5, 5, 3)}; };

    std::vector<std::pair<ConvexPolygon, ConvexPolygon>> extremal, perturbed;
    std::uint64_t retries = 0;
    for (int i = 0; i < 20; ++i) {
        auto k = core(i);
        auto lambda = detail::small_rational(rng, 1, 9, 4);
        auto p = stretch_vertical(scaled(k, 1, point()), detail::small_rational(rng, 0, 6, 3));
        auto q = stretch_vertical(scaled(k, lambda, point()), detail::small_rational(rng, 0, 6, 3));
        if (i % 4 == 0) // plain homothet: |P|/m^2 = |Q|/n^2
            q = scaled(p, lambda, point());
        extremal.emplace_back(p, q);
        // One extra vertex left of the core breaks the homothety.
        for (;;) {
            auto c = boundary_chains(k);
            std::vector<Point2> pts = k.vertices();
            pts.push_back({c.lower.front().x - detail::small_rational(rng, 1, 3, 2),
                           c.lower.front().y + detail::small_rational(rng, -2, 4, 2)});
            auto q2 = stretch_vertical(scaled(ConvexPolygon::hull(pts), lambda, point()), detail::small_rational(rng, 0, 6, 3));
            if (!bonnesen_report(p, q2).extremal) {
                perturbed.emplace_back(p, q2);
                break;
            }
            ++retries;
        }
    }

    std::uint64_t bm_equal = 0, partitions = 0;
    auto examine = [&](const ConvexPolygon& p, const ConvexPolygon& q, bool expect_extremal) {
        ++r.cases;
        auto rep = bonnesen_report(p, q);
        if (rep.area_sum < rep.bonnesen_rhs)
            detail::fail(r, "area below Bonnesen rhs");
        if (rep.extremal != expect_extremal)
            detail::fail(r, std::string(expect_extremal ? "stretched homothets not extremal" : "perturbed pair extremal"));
        if (rep.bm_comparison == Ordering::Less)
            detail::fail(r, "Bonnesen rhs below Brunn-Minkowski");
        bool coincide = rep.area_p / (rep.m * rep.m) == rep.area_q / (rep.n * rep.n);
        if ((rep.bm_comparison == Ordering::Equal) != coincide)
            detail::fail(r, "BM equality does not match |P|/m^2 = |Q|/n^2");
        bm_equal += rep.bm_comparison == Ordering::Equal;
        try {
            auto dcls = decompose_and_classify(p, q);
            if (dcls.certificate.has_value() != rep.extremal)
                detail::fail(r, "certificate mismatch");
        }
        catch (const Error& e) {
            detail::fail(r, e.what());
        }
        if (!stretch_invariance_check(p, q, detail::small_rational(rng, 0, 8, 3)))
            detail::fail(r, "stretch changed extremality");
        if (rep.extremal)
            for (std::size_t k : {2u, 3u, 5u}) {
                ++partitions;
                if (!partition_check(p, q, k))
                    detail::fail(r, "partition k=" + std::to_string(k) + " not extremal");
            }
    };
    for (const auto& [p, q] : extremal)
        examine(p, q, true);
    for (const auto& [p, q] : perturbed)
        examine(p, q, false);

    auto g = graph_body_bounds(ConvexPolygon::from_vertices({{0, 0}, {1, 0}, {1, 1}, {0, 1}}),
                               ConvexPolygon::from_vertices({{0, 0}, {2, 0}, {2, 1}, {0, 2}}));
    if (!g.slope_gap || *g.slope_gap != Rational(1, 2) || !g.slope_gap_bound || *g.slope_gap_bound != 8 || g.area_sum != 8)
        detail::fail(r, "slope-gap instance not attained");
    if (r.ok)
        r.detail = "20 extremal + 20 perturbed (" + std::to_string(retries) + " redraws), " + std::to_string(bm_equal) +
                   " BM-equal, " + std::to_string(partitions) + " partitions, slope-gap instance 8 = 15/2 + 1/2";
    return r;
}

// ---------------------------------------------------------- property suites

inline PointSet2D random_rational_set(std::mt19937_64& rng, int max_points)
{
    std::uniform_int_distribution<int> count(1, max_points), row(0, 4);
    std::vector<Point2> pts;
    int n = count(rng);
    for (int i = 0; i < n; ++i)
        pts.push_back({detail::small_rational(rng, -6, 6, 3), Rational(row(rng))});
    return PointSet2D(pts);
}

/// |c(X)| = |X|, row counts kept, c idempotent, rows start at x = 0.
inline Result compression_conservation(std::uint64_t cases, std::uint64_t seed)
{
    Result r;
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < cases; ++i, ++r.cases) {
        auto x = random_rational_set(rng, 12);
        auto c = compress(x);
        if (c.size() != x.size() || compress(c) != c)
            detail::fail(r, "size or idempotence");
        auto rx = sections_by_level(x, Axis::Horizontal), rc = sections_by_level(c, Axis::Horizontal);
        if (rx.size() != rc.size())
            detail::fail(r, "row levels changed");
        for (const auto& [lvl, pts] : rc)
            if (pts.size() != rx[lvl].size() || pts.front().x != 0)
                detail::fail(r, "row not an initial segment of the same size");
    }
    return r;
}

/// The compression chain never increases and starts at |A+B|.
inline Result chain_monotonicity(std::uint64_t cases, std::uint64_t seed)
{
    Result r;
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < cases; ++i, ++r.cases) {
        auto a = random_rational_set(rng, 8), b = random_rational_set(rng, 8);
        auto chain = compression_chain(a, b);
        if (chain.front() != Rational(detail::brute_sumset_size(a, b)))
            detail::fail(r, "chain does not start at |A+B|");
        for (std::size_t k = 1; k < chain.size(); ++k)
            if (chain[k] > chain[k - 1])
                detail::fail(r, "chain increases");
        auto diag = chain_diagnostic(a, b);
        for (std::size_t k = 1; k < diag.size(); ++k)
            if (diag[k] > diag[k - 1])
                detail::fail(r, "vertical-section chain increases");
    }
    return r;
}

/// Merging k shards equals the single run, for random small configurations.
inline Result shard_invariance(std::uint64_t cases, std::uint64_t seed)
{
    Result r;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> side(1, 2), shards(2, 7), min_mn(1, 2);
    const BoundMode modes[] = {BoundMode::LinesGS, BoundMode::SectionsGS, BoundMode::Doubling, BoundMode::OneDimensional};
    for (std::uint64_t i = 0; i < cases; ++i, ++r.cases) {
        SweepConfig cfg;
        cfg.width_a = side(rng);
        cfg.height_a = side(rng) + 1;
        cfg.width_b = side(rng) + 1;
        cfg.height_b = side(rng);
        cfg.mode = modes[rng() % 4];
        cfg.require_two_dimensional = rng() % 2;
        cfg.dedup_translations = rng() % 2;
        cfg.min_mn = min_mn(rng);
        auto whole = sweep(cfg);
        std::vector<SweepReport> parts;
        cfg.shard_count = shards(rng);
        for (cfg.shard_index = 0; cfg.shard_index < cfg.shard_count; ++cfg.shard_index)
            parts.push_back(sweep(cfg));
        std::shuffle(parts.begin(), parts.end(), rng);
        if (!(merge(parts) == whole))
            detail::fail(r, "shard merge differs");
        if (!whole.ok())
            detail::fail(r, "sweep not ok");
    }
    return r;
}

/// Verdicts survive maps of the allowed groups: for SectionsGS
/// (x,y) -> (ax + gy + t, by + s) with a, b of either sign; for LinesGS
/// (x,y) -> (ax + t, gx + by + s).
inline Result classifier_group_invariance(std::uint64_t cases, std::uint64_t seed)
{
    Result r;
    std::mt19937_64 rng(seed);
    std::vector<std::pair<PointSet2D, PointSet2D>> thm3_pool, thm2_pool;
    for (std::int64_t m = 2; m <= 4; ++m)
        for (std::int64_t n = 2; n <= 4; ++n)
            for (std::int64_t k = 1; k <= 7; k += 2)
                thm3_pool.push_back(gen_case_c({m, n, k}));
    thm3_pool.emplace_back(gen_eps_trapezoid({{4, 16, 1, 2}, {8, 12, 14}}), gen_trapezoid({4, 7, 1, 2}));
    thm3_pool.emplace_back(gen_eps_trapezoid({{3, 9, 1, 1}, {3, 6}}), gen_trapezoid({3, 3, 1, 1}));
    for (std::size_t m = 2; m <= 4; ++m)
        for (std::size_t h = 2; h <= 5; ++h)
            for (int c = -1; c <= 1; ++c)
                for (int d = -1; d <= 1; ++d) {
                    TrapezoidSpec s{m, h, c, d}, t{m + 1, h + 1, c, d};
                    try {
                        validate(s);
                        validate(t);
                    }
                    catch (const Error&) {
                        continue;
                    }
                    thm2_pool.emplace_back(gen_trapezoid(s), gen_trapezoid(t));
                }
    // A few non-extremal pairs keep NotExtremal in the mix.
    thm3_pool.emplace_back(PointSet2D{{0, 0}, {1, 0}, {0, 1}, {2, 1}}, PointSet2D{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    thm2_pool.emplace_back(PointSet2D{{0, 0}, {0, 2}, {1, 0}, {1, 1}}, PointSet2D{{0, 0}, {1, 0}, {0, 1}, {1, 1}});

    auto scale = [&] { return detail::pick(rng, {-3, -2, -1, Rational(-1, 2), Rational(1, 2), 1, 2, 3}); };
    auto shear = [&] { return detail::pick(rng, {-2, -1, Rational(-1, 2), 0, Rational(1, 3), 1, 2}); };
    auto shift = [&] { return detail::small_rational(rng, -7, 7, 2); };
    for (std::uint64_t i = 0; i < cases; ++i, ++r.cases) {
        try {
            if (i % 2 == 0) {
                const auto& [a, b] = thm3_pool[rng() % thm3_pool.size()];
                auto phi = AffineMap2D::make(scale(), shear(), 0, scale(), shift(), shift());
                auto before = classify_thm3(a, b).verdict, after = classify_thm3(apply_map(a, phi), apply_map(b, phi)).verdict;
                if (before != after)
                    detail::fail(r, std::string("SectionsGS verdict ") + to_string(before) + " became " + to_string(after));
            }
            else {
                const auto& [a, b] = thm2_pool[rng() % thm2_pool.size()];
                auto phi = AffineMap2D::make(scale(), 0, shear(), scale(), shift(), shift());
                auto before = classify_thm2(a, b).verdict, after = classify_thm2(apply_map(a, phi), apply_map(b, phi)).verdict;
                if (before != after)
                    detail::fail(r, std::string("LinesGS verdict ") + to_string(before) + " became " + to_string(after));
            }
        }
        catch (const Error& e) {
            detail::fail(r, e.what());
        }
    }
    return r;
}

/// Text and JSON forms reproduce the objects exactly.
inline Result file_round_trips(std::uint64_t cases, std::uint64_t seed)
{
    Result r;
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < cases; ++i, ++r.cases) {
        auto s = random_rational_set(rng, 10);
        if (parse_point_set(format_point_set(s)) != s)
            detail::fail(r, "point set text round trip");
        std::vector<Point2> pts;
        for (int k = 0; k < 6; ++k)
            pts.push_back({detail::small_rational(rng, -9, 9, 4), detail::small_rational(rng, -9, 9, 4)});
        auto poly = ConvexPolygon::hull(pts);
        if (parse_polygon(format_polygon(poly)) != poly)
            detail::fail(r, "polygon text round trip");
        Json j = Json::parse(Json{{"a", to_json(s)}, {"p", to_json(poly)}}.dump());
        if (point_set_from_json(j["a"], "a") != s || polygon_from_json(j["p"], "p") != poly)
            detail::fail(r, "JSON round trip");
    }
    // Generator output piped back in equals the in-memory family.
    int code = 0;
    for (std::int64_t k = 1; k <= 9; k += 2, ++r.cases) {
        Json g = detail::run({"gen", "case-c", "--m", "3", "--n", "2", "--k", std::to_string(k)}, "", code);
        auto [a, b] = gen_case_c({3, 2, k});
        if (code != 0 || point_set_from_json(g["a"], "a") != a || point_set_from_json(g["b"], "b") != b)
            detail::fail(r, "gen output differs from the generator");
        Json c = detail::run({"check", "thm3"}, g.dump(), code);
        if (code != 0 || c["verdict"] != to_string(classify_thm3(a, b).verdict))
            detail::fail(r, "piped check differs from in-memory check");
    }
    return r;
}

} // namespace sumset::checks

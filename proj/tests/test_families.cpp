#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sumset/sumset.hpp"

using namespace sumset;

namespace {

std::vector<std::size_t> column_sizes(const PointSet2D& x)
{
    std::vector<std::size_t> out;
    for (const auto& [lvl, pts] : sections_by_level(x, Axis::Vertical))
        out.push_back(pts.size());
    return out;
}

} // namespace

TEST(Trapezoid, SingleColumnIsSegment)
{
    auto t = gen_trapezoid({1, 5, Rational(3, 2), Rational(1, 2)});
    EXPECT_EQ(t.size(), 5u);
    EXPECT_FALSE(cover_stats(t).is_two_dimensional);
}

TEST(Trapezoid, FigureOneColumns)
{
    auto t = gen_trapezoid({6, 19, -1, 2});
    EXPECT_EQ(t.size(), 69u);
    EXPECT_EQ(column_sizes(t), (std::vector<std::size_t>{19, 16, 13, 10, 7, 4}));
    EXPECT_EQ(t[0], (Point2{0, 0}));
    EXPECT_TRUE(t.contains({5, 10}));
    EXPECT_TRUE(t.contains({5, 13}));
    EXPECT_FALSE(t.contains({5, 14}));
}

TEST(Trapezoid, InvalidSpecs)
{
    EXPECT_THROW(gen_trapezoid({2, 1, 0, 2}), Error);
    EXPECT_THROW(gen_trapezoid({2, 3, Rational(1, 2), 0}), Error);
    EXPECT_THROW(gen_trapezoid({0, 3, 0, 0}), Error);
    EXPECT_NO_THROW(gen_trapezoid({3, 2, Rational(1, 2), Rational(-1, 2)}));
}

TEST(Trapezoid, RationalSlopeColumnsStartOnLine)
{
    auto t = gen_trapezoid({3, 2, Rational(3, 2), Rational(1, 2)});
    EXPECT_EQ(column_sizes(t), (std::vector<std::size_t>{2, 3, 4}));
    EXPECT_TRUE(t.contains({1, Rational(1, 2)}));
    EXPECT_TRUE(t.contains({2, 4}));
}

TEST(EpsTrapezoid, FigureTwoInstance)
{
    EpsilonSpec s{{4, 16, 1, 2}, {8, 12, 14}};
    auto a = gen_eps_trapezoid(s);
    EXPECT_EQ(a.size(), 58u);
    // Rows 0..7 untouched, row 8 shifted by one, row 14 onward by three.
    auto base = gen_trapezoid(s.base);
    EXPECT_EQ(section(a, Axis::Horizontal, 7), section(base, Axis::Horizontal, 7));
    EXPECT_EQ(section(a, Axis::Horizontal, 8), translate(section(base, Axis::Horizontal, 8), {1, 0}));
    EXPECT_EQ(section(a, Axis::Horizontal, 18), translate(section(base, Axis::Horizontal, 18), {3, 0}));
}

TEST(EpsTrapezoid, ZeroEpsilonIsStandard)
{
    EpsilonSpec s{{4, 16, 1, 2}, {}};
    EXPECT_EQ(gen_eps_trapezoid(s), gen_trapezoid(s.base));
}

TEST(EpsTrapezoid, InvalidSpecs)
{
    EXPECT_THROW(gen_eps_trapezoid({{4, 16, 1, 2}, {8, 9}}), Error);
    EXPECT_THROW(gen_eps_trapezoid({{4, 16, 1, 2}, {7}}), Error);
    EXPECT_THROW(gen_eps_trapezoid({{4, 16, 1, 2}, {15}}), Error);
    EXPECT_THROW(gen_eps_trapezoid({{4, 16, 0, 0}, {}}), Error);
    EXPECT_THROW(gen_eps_trapezoid({{4, 16, -1, 0}, {}}), Error);
}

TEST(CaseC, FigureThreeInstance)
{
    auto [a, b] = gen_case_c({4, 4, 7});
    EXPECT_EQ(a.size(), 52u);
    EXPECT_EQ(b.size(), 28u);
    EXPECT_EQ(cover_stats(b).max_horizontal_section, 4u);
    EXPECT_EQ(cover_stats(a).max_horizontal_section, 4u);
    EXPECT_THROW(gen_case_c({4, 4, 6}), Error);
    EXPECT_THROW(gen_case_c({1, 4, 7}), Error);
}

TEST(Wild, Instances)
{
    for (int x = 4; x <= 8; ++x) {
        auto [a, b] = gen_wild(x);
        EXPECT_EQ(a.size(), 3u);
        EXPECT_EQ(b.size(), 9u);
        EXPECT_TRUE(bound(BoundMode::SectionsGS, a, b).extremal) << x;
        EXPECT_EQ(cover_stats(a).horizontal_line_count, 3u);
        EXPECT_EQ(cover_stats(a).max_horizontal_section, 1u);
    }
    EXPECT_TRUE(bound(BoundMode::SectionsGS, gen_wild(Rational(9, 2)).first, gen_wild(Rational(9, 2)).second).extremal);
    EXPECT_THROW(gen_wild(3), Error);
}

TEST(Families, TrapezoidPairsExtremalInLinesMode)
{
    int checked = 0;
    for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d)
            for (std::size_t m = 1; m <= 4; ++m)
                for (std::size_t n = 1; n <= 4; ++n)
                    for (std::size_t h = 1; h <= 6; ++h)
                        for (std::size_t h2 = 1; h2 <= 6; ++h2) {
                            TrapezoidSpec s{m, h, c, d}, t{n, h2, c, d};
                            try {
                                validate(s);
                                validate(t);
                            }
                            catch (const Error&) {
                                continue;
                            }
                            auto a = gen_trapezoid(s), b = gen_trapezoid(t);
                            auto ia = oracle::to_iset(a), ib = oracle::to_iset(b);
                            EXPECT_EQ(oracle::gs_gap_scaled(oracle::sum(ia, ib).size(), ia.size(), m, ib.size(), n),
                                      0);
                            ++checked;
                        }
    EXPECT_GT(checked, 5000);
}

TEST(Families, EpsilonPairsExtremalInSectionsMode)
{
    int checked = 0;
    for (std::int64_t c = 0; c <= 2; ++c)
        for (std::int64_t d = 0; d <= 2; ++d) {
            if (c == 0 && d == 0)
                continue;
            for (std::size_t m = 2; m <= 4; ++m)
                for (std::size_t h = 1; h <= 12; ++h) {
                    std::int64_t lo = static_cast<std::int64_t>(m) * d, hi = static_cast<std::int64_t>(h) - c - 1;
                    // All admissible epsilon supports in [lo, hi].
                    std::vector<std::vector<std::int64_t>> supports{{}};
                    for (std::int64_t i = lo; i <= hi; ++i) {
                        auto cur = supports.size();
                        for (std::size_t s = 0; s < cur; ++s)
                            if (supports[s].empty() || i - supports[s].back() >= std::max(c, d)) {
                                auto v = supports[s];
                                v.push_back(i);
                                supports.push_back(v);
                            }
                    }
                    for (const auto& ones : supports) {
                        EpsilonSpec e{{m, h, c, d}, ones};
                        try {
                            validate(e);
                        }
                        catch (const Error&) {
                            continue;
                        }
                        auto a = gen_eps_trapezoid(e);
                        auto ibase = oracle::to_iset(gen_trapezoid(e.base));
                        for (std::size_t n = 2; n <= 4; ++n) {
                            auto b = gen_trapezoid({n, (n - 1) * static_cast<std::size_t>(d) + 1, c, d});
                            auto ia = oracle::to_iset(a), ib = oracle::to_iset(b);
                            // The shift preserves equality only for an extremal standard base pair.
                            if (oracle::gs_gap_scaled(oracle::sum(ibase, ib).size(), ibase.size(),
                                                      oracle::max_row(ibase), ib.size(), oracle::max_row(ib)) != 0)
                                continue;
                            EXPECT_EQ(oracle::gs_gap_scaled(oracle::sum(ia, ib).size(), ia.size(), oracle::max_row(ia),
                                                            ib.size(), oracle::max_row(ib)),
                                      0)
                                << "c=" << c << " d=" << d << " m=" << m << " h=" << h << " n=" << n;
                            ++checked;
                        }
                    }
                }
        }
    EXPECT_GT(checked, 200);
}

TEST(Families, CaseCExtremalForTestedOddK)
{
    for (std::int64_t m = 2; m <= 5; ++m)
        for (std::int64_t n = 2; n <= 5; ++n)
            for (std::int64_t k = 1; k <= 15; k += 2) {
                auto [a, b] = gen_case_c({m, n, k});
                auto ia = oracle::to_iset(a), ib = oracle::to_iset(b);
                EXPECT_EQ(oracle::max_row(ia), static_cast<std::size_t>(m));
                EXPECT_EQ(oracle::max_row(ib), static_cast<std::size_t>(n));
                EXPECT_EQ(oracle::gs_gap_scaled(oracle::sum(ia, ib).size(), ia.size(), m, ib.size(), n), 0)
                    << m << " " << n << " " << k;
            }
}

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sumset/sumset.hpp"

using namespace sumset;

namespace {

std::vector<Rational> R(std::initializer_list<std::int64_t> v) { return {v.begin(), v.end()}; }

SupportedSequence seq(std::initializer_list<std::pair<std::int64_t, std::int64_t>> e)
{
    std::map<Rational, Rational> m;
    for (auto [i, v] : e)
        m.emplace(i, v);
    return SupportedSequence(m);
}

} // namespace

TEST(Bound, WildPairSections)
{
    auto [a, b] = gen_wild(4);
    auto r = bound(BoundMode::SectionsGS, a, b);
    EXPECT_EQ(r.m, 1u);
    EXPECT_EQ(r.n, 4u);
    EXPECT_EQ(r.lhs, 17);
    EXPECT_EQ(r.rhs, 17);
    EXPECT_TRUE(r.extremal);
}

TEST(Bound, LinesTrapezoidPair)
{
    auto r = bound(BoundMode::LinesGS, gen_trapezoid({2, 2, 0, 0}), gen_trapezoid({3, 2, 0, 0}));
    EXPECT_EQ(r.rhs, 12);
    EXPECT_EQ(r.lhs, 12);
    EXPECT_TRUE(r.extremal);
}

TEST(Bound, DoublingSquare)
{
    auto a = gen_trapezoid({2, 2, 0, 0});
    auto r = bound(BoundMode::Doubling, a, a);
    EXPECT_EQ(r.rhs, 9);
    EXPECT_EQ(r.lhs, 9);
    EXPECT_THROW(bound(BoundMode::Doubling, a, PointSet2D{{0, 0}}), Error);
}

TEST(Bound, OneDimensionalRequiresParallelLines)
{
    PointSet2D a{{0, 0}, {1, 1}, {2, 2}}, b{{5, 0}, {6, 1}};
    auto r = bound(BoundMode::OneDimensional, a, b);
    EXPECT_EQ(r.rhs, 4);
    EXPECT_EQ(r.lhs, 4);
    EXPECT_THROW(bound(BoundMode::OneDimensional, a, PointSet2D{{0, 0}, {1, 0}}), Error);
    EXPECT_THROW(bound(BoundMode::OneDimensional, PointSet2D{{0, 0}, {1, 0}, {0, 1}}, b), Error);
}

TEST(FreimanThreshold, SpecExamples)
{
    EXPECT_EQ(freiman_threshold_rhs(10, 1), 27);
    EXPECT_EQ(freiman_threshold_rhs(9, 2), 25);
    EXPECT_EQ(freiman_threshold_rhs(4, 3), 7);
}

TEST(UValues, SpecExamples)
{
    auto u1 = u_values(SupportedSequence::consecutive(R({1, 2})), SupportedSequence::consecutive(R({3, 4})));
    EXPECT_EQ(u1, (std::map<Rational, Rational>{{0, 4}, {1, 5}, {2, 6}}));
    auto u2 = u_values(SupportedSequence::consecutive(R({1, 2})), SupportedSequence::consecutive(R({3, 5})));
    EXPECT_EQ(u2, (std::map<Rational, Rational>{{0, 4}, {1, 6}, {2, 7}}));
    auto u3 = u_values(seq({{0, 2}}), seq({{0, 1}, {2, 7}}));
    EXPECT_EQ(u3, (std::map<Rational, Rational>{{0, 3}, {2, 9}}));
    EXPECT_THROW(u_values(SupportedSequence{}, seq({{0, 1}})), Error);
}

TEST(Averaging, SpecExamples)
{
    auto r1 = averaging_report(SupportedSequence::consecutive(R({1, 2})), SupportedSequence::consecutive(R({3, 4})));
    EXPECT_EQ(r1.full_mean, 5);
    EXPECT_EQ(r1.rhs, 5);
    EXPECT_TRUE(r1.equality);
    EXPECT_TRUE(r1.ap_condition);

    auto r2 = averaging_report(SupportedSequence::consecutive(R({1, 2})), SupportedSequence::consecutive(R({3, 5})));
    EXPECT_EQ(r2.full_mean, Rational(17, 3));
    EXPECT_EQ(r2.rhs, Rational(11, 2));
    EXPECT_FALSE(r2.equality);
    EXPECT_FALSE(r2.ap_condition);

    auto r3 = averaging_report(seq({{0, 2}}), seq({{0, 1}, {2, 7}}));
    EXPECT_EQ(r3.full_mean, 6);
    EXPECT_EQ(r3.rhs, 6);
    EXPECT_TRUE(r3.equality);
}

TEST(Averaging, UPlusUsesLargestValues)
{
    // I+J = {0..4} has 5 sums but only |I|+|J|-1 = 4 enter the mean.
    auto r = averaging_report(seq({{0, 1}, {3, 1}}), seq({{0, 1}, {1, 4}, {2, 1}}));
    EXPECT_EQ(r.u_values.size(), 6u);
    EXPECT_EQ(r.u_plus_mean, Rational(5 + 5 + 2 + 2, 4));
    EXPECT_GE(r.full_mean, r.u_plus_mean);
    EXPECT_GE(r.u_plus_mean, r.rhs);
}

TEST(Averaging, RejectsNegativeValues) { EXPECT_THROW(seq({{0, -1}}), Error); }

TEST(ChainDiagnostic, SpecExamples)
{
    auto all12 = chain_diagnostic(gen_trapezoid({2, 2, 0, 0}), gen_trapezoid({3, 2, 0, 0}));
    EXPECT_EQ(all12, R({12, 12, 12, 12}));
    PointSet2D tri{{0, 0}, {1, 0}, {0, 1}};
    EXPECT_EQ(chain_diagnostic(tri, tri), R({6, 6, 6, 6}));
}

TEST(ChainDiagnostic, DiagonalPairValuesFromOracle)
{
    // Vertical sections: A_0 = {(0,0)}, A_1 = {(1,1)}; B_0 = {(0,0)}, B_1 = {(1,0)}.
    // Level t = 1 has two single-point sums, so the second term is 1 + 1 + 1 = 3.
    auto c = chain_diagnostic(PointSet2D{{0, 0}, {1, 1}}, PointSet2D{{0, 0}, {1, 0}});
    EXPECT_EQ(c, R({4, 3, 3, 3}));
}

TEST(Bound, LinesAndSectionsAgreeWithIntegerOracle)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        auto a = oracle::random_set(rng, 3, 4), b = oracle::random_set(rng, 4, 3);
        auto pa = oracle::to_pointset(a), pb = oracle::to_pointset(b);
        std::size_t lhs = oracle::sum(a, b).size();
        auto lines = bound(BoundMode::LinesGS, pa, pb);
        std::int64_t g = oracle::gs_gap_scaled(lhs, a.size(), oracle::distinct_x(a), b.size(), oracle::distinct_x(b));
        EXPECT_EQ(lines.extremal, g == 0);
        EXPECT_EQ(lines.gap.sign() >= 0, g >= 0);
        auto sec = bound(BoundMode::SectionsGS, pa, pb);
        std::int64_t gs = oracle::gs_gap_scaled(lhs, a.size(), oracle::max_row(a), b.size(), oracle::max_row(b));
        EXPECT_EQ(sec.extremal, gs == 0);
    }
}

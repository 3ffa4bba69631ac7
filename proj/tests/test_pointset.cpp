#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sumset/sumset.hpp"

using namespace sumset;

TEST(Rational, ReducesAndOrders)
{
    Rational a(6, -4);
    EXPECT_EQ(a.str(), "-3/2");
    EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
    EXPECT_EQ(Rational::parse("+7"), Rational(7));
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ(Rational(-7, 2).floor(), -4);
    EXPECT_EQ(Rational(-7, 2).ceil(), -3);
}

TEST(Rational, ParseRejectsMalformed)
{
    for (const char* bad : {"", "1/0", "1/-2", "a", "1.5", "1/", "/3", "--1"})
        EXPECT_THROW(Rational::parse(bad), Error) << bad;
}

TEST(Rational, PromotesBeyondInt64AndDemotesBack)
{
    Rational big(std::numeric_limits<std::int64_t>::max());
    Rational sq = big * big;
    EXPECT_FALSE(sq.is_small());
    Rational back = sq / big;
    EXPECT_TRUE(back.is_small());
    EXPECT_EQ(back, big);
    EXPECT_EQ(Rational::parse(sq.str()), sq);
    Rational tiny(1, std::numeric_limits<std::int64_t>::max());
    EXPECT_EQ((tiny * tiny) / tiny, tiny);
}

TEST(Rational, SmallAndBigPathsAgreeOnRandomArithmetic)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(-1'000'000'000'000LL, 1'000'000'000'000LL);
    using BR = Rational::BigRational;
    auto as_big = [](const Rational& r) { return BR(r.numerator(), r.denominator()); };
    for (int i = 0; i < 2000; ++i) {
        std::int64_t d1 = dist(rng), d2 = dist(rng);
        if (d1 == 0 || d2 == 0)
            continue;
        Rational a(dist(rng), d1), b(dist(rng), d2);
        BR x = as_big(a), y = as_big(b);
        EXPECT_EQ(as_big(a + b), x + y);
        EXPECT_EQ(as_big(a - b), x - y);
        EXPECT_EQ(as_big(a * b), x * y);
        if (!b.is_zero()) {
            EXPECT_EQ(as_big(a / b), x / y);
        }
        EXPECT_EQ(a < b, x < y);
    }
}

TEST(MinkowskiSum, SpecExamples)
{
    PointSet2D a{{0, 0}, {1, 0}}, b{{0, 0}, {0, 1}};
    EXPECT_EQ(minkowski_sum(a, b), (PointSet2D{{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    PointSet2D any{{3, 1}, {Rational(1, 2), 2}, {-1, 5}};
    EXPECT_EQ(minkowski_sum(PointSet2D{{0, 0}}, any), any);
    auto [wa, wb] = gen_wild(4);
    EXPECT_EQ(minkowski_sum(wa, wb).size(), 17u);
    EXPECT_THROW(minkowski_sum(PointSet2D{}, a), Error);
}

TEST(CoverStats, SpecExamples)
{
    auto t = gen_trapezoid({6, 19, -1, 2});
    EXPECT_EQ(cover_stats(t).vertical_line_count, 6u);
    auto [wa, wb] = gen_wild(4);
    EXPECT_EQ(cover_stats(wb).max_horizontal_section, 4u);
    auto s = cover_stats(PointSet2D{{0, 0}});
    EXPECT_EQ(s.vertical_line_count, 1u);
    EXPECT_EQ(s.horizontal_line_count, 1u);
    EXPECT_EQ(s.max_horizontal_section, 1u);
    EXPECT_EQ(s.max_vertical_section, 1u);
    EXPECT_FALSE(s.is_two_dimensional);
    EXPECT_THROW(cover_stats(PointSet2D{}), Error);
}

TEST(Section, SpecExamples)
{
    auto [wa, wb] = gen_wild(4);
    EXPECT_EQ(section(wb, Axis::Horizontal, 0), (PointSet2D{{0, 0}, {1, 0}, {2, 0}, {4, 0}}));
    EXPECT_TRUE(section(wb, Axis::Horizontal, 10).empty());
    EXPECT_EQ(section(gen_trapezoid({2, 2, 0, 0}), Axis::Vertical, 1), (PointSet2D{{1, 0}, {1, 1}}));
}

TEST(AffineMap, SpecExamples)
{
    PointSet2D x{{0, 0}, {1, 1}};
    EXPECT_EQ(apply_map(x, AffineMap2D::identity()), x);
    EXPECT_EQ(apply_map(x, AffineMap2D::upper_triangular(1, -1, 1)), (PointSet2D{{0, 0}, {0, 1}}));
    EXPECT_EQ(apply_map(PointSet2D{{0, 0}, {1, 0}}, AffineMap2D::diagonal(-1, 1)), (PointSet2D{{0, 0}, {-1, 0}}));
    EXPECT_THROW(AffineMap2D::diagonal(0, 1), Error);
    EXPECT_THROW(AffineMap2D::make(1, 2, 2, 4, 0, 0), Error);
}

TEST(AffineMap, ComposeMatchesSequentialApplication)
{
    auto f = AffineMap2D::make(2, 1, 0, 3, 5, -1);
    auto g = AffineMap2D::make(1, -1, 1, 1, 0, 2);
    Point2 p{Rational(1, 3), 7};
    EXPECT_EQ(f.compose(g)(p), f(g(p)));
}

TEST(ArithmeticProgression, SpecExamples)
{
    auto r = arithmetic_progression_of(PointSet2D{{0, 0}, {0, 2}, {0, 4}});
    ASSERT_TRUE(r);
    EXPECT_EQ(*r->difference, (Point2{0, 2}));
    EXPECT_FALSE(arithmetic_progression_of(PointSet2D{{0, 0}, {0, 1}, {0, 3}}));
    auto single = arithmetic_progression_of(PointSet2D{{5, 7}});
    ASSERT_TRUE(single);
    EXPECT_FALSE(single->difference);
    EXPECT_TRUE(arithmetic_progression_of(PointSet2D{{0, 0}, {3, 1}}));
    EXPECT_THROW(arithmetic_progression_of(PointSet2D{{0, 0}, {1, 0}, {0, 1}}), Error);
}

TEST(MinkowskiSum, AgreesWithIntegerOracle)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        auto a = oracle::random_set(rng, 4, 4), b = oracle::random_set(rng, 5, 3);
        EXPECT_EQ(oracle::to_iset(minkowski_sum(oracle::to_pointset(a), oracle::to_pointset(b))), oracle::sum(a, b));
    }
}

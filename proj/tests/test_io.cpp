#include <gtest/gtest.h>

#include <filesystem>

#include "sumset/sumset.hpp"

using namespace sumset;

namespace {

std::string parse_error(const std::string& text)
{
    try {
        parse_point_set(text, "f.txt");
    }
    catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ParseError);
        return e.what();
    }
    ADD_FAILURE() << "no error for: " << text;
    return {};
}

} // namespace

TEST(PointFormat, CommentsBlankLinesAndFractions)
{
    auto s = parse_point_set("# header\n\n1 2\n  -1/2   3 # trailing\n\t0 0\n1 2\n");
    EXPECT_EQ(s, (PointSet2D{{0, 0}, {1, 2}, {Rational(-1, 2), 3}}));
    EXPECT_EQ(format_point_set(s), "-1/2 3\n0 0\n1 2\n");
}

TEST(PointFormat, ErrorsCarryLineAndColumn)
{
    EXPECT_NE(parse_error("0 0\n1 x\n").find("f.txt:2:3:"), std::string::npos);
    EXPECT_NE(parse_error("0 0 0\n").find("f.txt:1:5:"), std::string::npos);
    EXPECT_NE(parse_error("\n\n5\n").find("f.txt:3:2:"), std::string::npos);
    EXPECT_NE(parse_error("1/0 1\n").find("f.txt:1:1:"), std::string::npos);
    EXPECT_NE(parse_error("2/4 1\n").find("not reduced"), std::string::npos);
}

TEST(PolygonFormat, ValidatesOrientation)
{
    auto p = parse_polygon("0 0\n2 0\n2 1\n0 2\n");
    EXPECT_EQ(area(p), 3);
    EXPECT_EQ(parse_polygon(format_polygon(p)), p);
    EXPECT_EQ(parse_polygon("0 0\n0 3\n").size(), 2u);
    EXPECT_THROW(parse_polygon("0 0\n0 2\n2 0\n"), Error);
    EXPECT_THROW(parse_polygon("# nothing\n"), Error);
}

TEST(Json, RationalsAreStrings)
{
    auto j = to_json(bound(BoundMode::SectionsGS, gen_wild(4).first, gen_wild(4).second));
    EXPECT_EQ(j.dump(), R"({"mode":"SectionsGS","m":1,"n":4,"lhs":"17","rhs":"17","gap":"0","extremal":true})");
    auto r = to_json(bonnesen_report(parse_polygon("0 0\n1 0\n0 1\n"), parse_polygon("0 0\n1 0\n1 1\n0 1\n")));
    EXPECT_EQ(r["area_sum"], "7/2");
    EXPECT_EQ(r["bm"]["comparison"], "gt");
    EXPECT_EQ(r["bm"]["lhs_squared"], "9/4");
    EXPECT_EQ(r["bm"]["rhs_squared"], "2");
}

TEST(Json, ClassificationCarriesWitness)
{
    auto [a, b] = gen_case_c({4, 4, 7});
    auto j = to_json(classify_thm3(a, b));
    EXPECT_EQ(j["verdict"], "CaseCPair");
    EXPECT_EQ(j["case_c"]["k"], 7);
    EXPECT_TRUE(j["witness_map"]["a11"].is_string());
    EXPECT_EQ(point_set_from_json(to_json(a), "a"), a);
}

TEST(Json, ApproxAnnotationMirrorsRationals)
{
    Json j{{"x", "1/4"}, {"flag", true}, {"nested", {{"y", "-3"}}}, {"name", "LinesGS"}};
    auto a = approx_annotate(j);
    EXPECT_DOUBLE_EQ(a["x"].get<double>(), 0.25);
    EXPECT_DOUBLE_EQ(a["nested"]["y"].get<double>(), -3.0);
    EXPECT_FALSE(a.contains("flag"));
    EXPECT_FALSE(a.contains("name"));
}

TEST(Files, WriteReadRoundTrip)
{
    auto dir = std::filesystem::temp_directory_path() / "sumset_io_test";
    std::filesystem::create_directories(dir);
    auto path = (dir / "t.txt").string();
    auto t = gen_trapezoid({6, 19, -1, 2});
    write_text_file(path, format_point_set(t));
    EXPECT_EQ(parse_point_set(read_text_file(path), path), t);
    EXPECT_THROW(read_text_file((dir / "missing.txt").string()), Error);
}

TEST(Svg, DeterministicAndCountsPoints)
{
    auto t = gen_trapezoid({6, 19, -1, 2});
    auto s1 = render_svg({t}, "T");
    EXPECT_EQ(s1, render_svg({t}, "T"));
    std::size_t points = 0;
    for (auto pos = s1.find("class=\"point\""); pos != std::string::npos; pos = s1.find("class=\"point\"", pos + 1))
        ++points;
    EXPECT_EQ(points, 69u);
    EXPECT_THROW(render_svg(std::vector<Overlay>{}), Error);

    auto [a, b] = gen_case_c({4, 4, 7});
    auto two = render_svg({SvgPanel{"A", {a}, {}}, SvgPanel{"B", {b}, {}}});
    EXPECT_NE(two.find("id=\"panel1\""), std::string::npos);
    std::size_t in_b = 0;
    auto start = two.find("id=\"panel1\"");
    for (auto pos = two.find("class=\"point\"", start); pos != std::string::npos; pos = two.find("class=\"point\"", pos + 1))
        ++in_b;
    EXPECT_EQ(in_b, 28u);
}

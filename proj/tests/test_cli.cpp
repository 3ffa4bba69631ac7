#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "sumset/sumset.hpp"

using namespace sumset;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name)
{
    auto d = fs::temp_directory_path() / "sumset_cli_test" / name;
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

std::string shell(const std::string& cmd, int& status)
{
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    char buf[4096];
    while (p && std::fgets(buf, sizeof buf, p))
        out += buf;
    status = p ? pclose(p) : -1;
    return out;
}

} // namespace

TEST(Cli, WildPipelineInProcess)
{
    auto g = run({"gen", "wild", "--x", "4"});
    ASSERT_EQ(g.code, 0);
    auto b = run({"bound", "--mode", "sections"}, g.out);
    ASSERT_EQ(b.code, 0) << b.err;
    auto j = b.json();
    EXPECT_EQ(j["lhs"], "17");
    EXPECT_EQ(j["rhs"], "17");
    EXPECT_EQ(j["extremal"], true);
    EXPECT_EQ(j["m"], 1);
    EXPECT_EQ(j["n"], 4);
}

TEST(Cli, WildPipelineThroughShell)
{
    const char* exe = std::getenv("SUMSET_CLI");
    if (!exe)
        GTEST_SKIP() << "SUMSET_CLI not set";
    int status = 0;
    auto out = shell(std::string(exe) + " gen wild --x 4 | " + exe + " bound --mode sections", status);
    EXPECT_EQ(status, 0);
    auto j = Json::parse(out);
    EXPECT_EQ(j["lhs"], "17");
    EXPECT_EQ(j["extremal"], true);
    shell(std::string(exe) + " sumset --a /nonexistent --b /nonexistent 2>/dev/null", status);
    EXPECT_EQ(WEXITSTATUS(status), 2);
}

TEST(Cli, SectionsSweepHasNoUnclassifiedPairs)
{
    auto r = run({"sweep", "--grid", "3x3", "--mode", "sections", "--require-2d", "--min-mn", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = r.json();
    EXPECT_TRUE(j["unclassified"].empty());
    EXPECT_TRUE(j["violations"].empty());
    auto sharded = run({"sweep", "--grid", "3x3", "--mode", "sections", "--require-2d", "--min-mn", "2", "--jobs", "3"});
    EXPECT_EQ(sharded.out, r.out);
}

TEST(Cli, SweepShardAndCsv)
{
    auto dir = scratch("sweep");
    auto csv = (dir / "s.csv").string();
    std::uint64_t total = 0;
    for (int i = 0; i < 3; ++i) {
        auto r = run({"--out", csv, "sweep", "--grid", "2x2", "--shard", std::to_string(i) + "/3"});
        ASSERT_EQ(r.code, 0);
        total += r.json()["pairs_checked"].get<std::uint64_t>();
    }
    EXPECT_EQ(total, 225u);
    EXPECT_NE(read_text_file(csv).find("count,pairs_checked,"), std::string::npos);
    EXPECT_EQ(run({"sweep", "--grid", "2by2"}).code, 2);
    EXPECT_EQ(run({"sweep", "--shard", "3/2"}).code, 2);
}

TEST(Cli, FigureTwoWritesFilesAndVerifies)
{
    auto dir = scratch("fig2");
    auto r = run({"--out", dir.string(), "figure", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = r.json();
    EXPECT_EQ(j["verified"], true);
    EXPECT_EQ(j["bound"]["rhs"], "133");
    EXPECT_EQ(j["classification"]["verdict"], "EpsTrapezoidPair");
    auto svg = read_text_file((dir / "figure2.svg").string());
    EXPECT_EQ(parse_point_set(read_text_file((dir / "figure2_a.txt").string())).size(), 58u);
    EXPECT_EQ(parse_point_set(read_text_file((dir / "figure2_b.txt").string())).size(), 22u);
    ASSERT_EQ(run({"--out", dir.string(), "figure", "2"}).code, 0);
    EXPECT_EQ(read_text_file((dir / "figure2.svg").string()), svg);
}

TEST(Cli, FiguresOneAndThree)
{
    auto dir = scratch("fig13");
    auto one = run({"--out", dir.string(), "figure", "1"});
    ASSERT_EQ(one.code, 0) << one.err;
    EXPECT_EQ(one.json()["size"], 69);
    EXPECT_EQ(one.json()["column_sizes"], Json::parse(R"(["19","16","13","10","7","4"])"));
    auto three = run({"--out", dir.string(), "figure", "3"});
    ASSERT_EQ(three.code, 0);
    EXPECT_EQ(three.json()["size_a"], 52);
    EXPECT_EQ(three.json()["size_b"], 28);
    EXPECT_EQ(run({"figure", "4"}).code, 2);
}

TEST(Cli, GeneratedFilesLoadBack)
{
    auto dir = scratch("gen");
    auto prefix = (dir / "c").string();
    ASSERT_EQ(run({"--out", prefix, "gen", "case-c", "--m", "3", "--n", "2", "--k", "5"}).code, 0);
    auto r = run({"check", "thm3", "--a", prefix + "_a.txt", "--b", prefix + "_b.txt"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["verdict"], "CaseCPair");

    auto t = run({"gen", "trapezoid", "--m", "3", "--h", "4", "--c", "1/2", "--d", "-1/2", "--pair-m", "2", "--pair-h", "3"});
    ASSERT_EQ(t.code, 0) << t.err;
    auto c2 = run({"check", "thm2"}, t.out);
    ASSERT_EQ(c2.code, 0) << c2.err;
    EXPECT_EQ(c2.json()["verdict"], "TrapezoidPair");
    EXPECT_EQ(c2.json()["trapezoid_a"]["c"], "1/2");

    auto e = run({"gen", "eps-trapezoid", "--m", "4", "--h", "16", "--c", "1", "--d", "2", "--ones", "8,12,14",
                  "--partner-n", "4"});
    ASSERT_EQ(e.code, 0) << e.err;
    EXPECT_EQ(e.json()["size_a"], 58);
    EXPECT_EQ(run({"check", "split"}, e.out).code, 0);
}

TEST(Cli, CompressSingleAndPair)
{
    auto s = run({"compress"}, "3 0\n5 0\n-1 1\n");
    ASSERT_EQ(s.code, 0) << s.err;
    EXPECT_EQ(s.json()["compressed"], "0 0\n0 1\n1 0\n");
    auto [a, b] = gen_wild(4);
    auto p = run({"compress"}, Json{{"a", to_json(a)}, {"b", to_json(b)}}.dump());
    ASSERT_EQ(p.code, 0);
    EXPECT_EQ(p.json()["non_increasing"], true);
    EXPECT_EQ(p.json()["chain"][0], "17");
}

TEST(Cli, PolygonCommands)
{
    Json pq{{"p", "0 0\n2 0\n2 1\n0 2\n"}, {"q", "0 0\n1 0\n1 1\n0 1\n"}};
    auto sum = run({"poly", "sum"}, pq.dump());
    ASSERT_EQ(sum.code, 0);
    EXPECT_EQ(sum.json()["area"], "8");
    auto rep = run({"--approx", "poly", "report"}, pq.dump());
    ASSERT_EQ(rep.code, 0);
    EXPECT_EQ(rep.json()["bonnesen_rhs"], "15/2");
    EXPECT_DOUBLE_EQ(rep.json()["approx"]["bonnesen_rhs"].get<double>(), 7.5);
    auto gb = run({"poly", "graph-bounds"}, pq.dump());
    EXPECT_EQ(gb.json()["delta"], "-1/2");
    auto st = run({"poly", "stretch", "--h", "1"}, Json{{"p", "0 0\n2 0\n0 2\n"}}.dump());
    EXPECT_EQ(st.json()["area"], "4");
    EXPECT_EQ(run({"poly", "stretch", "--h", "-1"}, Json{{"p", "0 0\n2 0\n0 2\n"}}.dump()).code, 2);
    Json rect{{"p", "0 0\n1 0\n1 2\n0 2\n"}, {"q", "0 0\n2 0\n2 1\n0 1\n"}};
    auto dec = run({"poly", "decompose"}, rect.dump());
    ASSERT_EQ(dec.code, 0);
    EXPECT_EQ(dec.json()["certificate"]["ratio"], "2");
    EXPECT_EQ(run({"poly", "partition", "--k", "3"}, rect.dump()).code, 0);
    EXPECT_EQ(run({"poly", "partition"}, pq.dump()).code, 2); // not extremal
    auto cont = run({"check", "continuous"}, rect.dump());
    EXPECT_EQ(cont.json()["report"]["extremal"], true);
}

TEST(Cli, LemmaAverage)
{
    auto r = run({"lemma-avg", "--a", "1,2", "--b", "3,4"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["equality"], true);
    auto k = run({"lemma-avg", "--a", "0:2", "--b", "0:1,2:7"});
    EXPECT_EQ(k.json()["u_values"], Json::parse(R"({"0":"3","2":"9"})"));
    EXPECT_EQ(run({"lemma-avg", "--a", "1,-2", "--b", "1"}).code, 2);
}

TEST(Cli, InputErrorsAreExitTwoWithPosition)
{
    auto dir = scratch("bad");
    auto bad = (dir / "bad.txt").string();
    write_text_file(bad, "0 0\n1 1/0\n");
    auto r = run({"sumset", "--a", bad, "--b", bad});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("bad.txt:2:3"), std::string::npos) << r.err;
    EXPECT_EQ(run({"bound", "--mode", "nope"}, "{\"a\":\"0 0\",\"b\":\"0 0\"}").code, 2);
    EXPECT_EQ(run({"bound"}, "not json").code, 2);
    EXPECT_EQ(run({"bound", "--mode", "doubling"}, Json{{"a", "0 0\n1 0\n"}, {"b", "0 0\n"}}.dump()).code, 2);
    auto [wa, wb] = gen_wild(4);
    EXPECT_EQ(run({"check", "split"}, Json{{"a", to_json(wa)}, {"b", to_json(wb)}}.dump()).code, 2);
    EXPECT_EQ(run({"gen", "wild", "--x", "3"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, HelpListsEverySubcommand)
{
    auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    for (const char* sub : {"sumset", "bound", "compress", "gen", "check", "sweep", "poly", "lemma-avg", "figure"})
        EXPECT_NE(r.out.find(sub), std::string::npos) << sub;
    EXPECT_EQ(run({"gen", "--help"}).code, 0);
}

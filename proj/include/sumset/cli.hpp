#pragma once

#include <filesystem>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sumset/compression.hpp"
#include "sumset/families.hpp"
#include "sumset/io.hpp"
#include "sumset/svg.hpp"

namespace sumset {

namespace cli {

enum Exit : int { Ok = 0, Failed = 1, BadInput = 2 };

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    bool approx = false;
    std::string out_path;
    std::optional<std::string> stdin_text;

    const std::string& read_stdin()
    {
        if (!stdin_text)
            stdin_text = std::string(std::istreambuf_iterator<char>(in), {});
        return *stdin_text;
    }

    Json stdin_json()
    {
        const auto& text = read_stdin();
        auto first = text.find_first_not_of(" \t\r\n");
        if (first == std::string::npos || text[first] != '{')
            throw Error(ErrorCode::ParseError, "<stdin>: expected a JSON object");
        return parse_json(text, "<stdin>");
    }

    /// Prints the report; --out (where not claimed by the command) gets a copy.
    int emit(Json report, int code = Ok, bool copy_to_out = true)
    {
        if (approx)
            report["approx"] = approx_annotate(report);
        std::string text = report.dump(2) + "\n";
        out << text;
        if (copy_to_out && !out_path.empty())
            write_text_file(out_path, text);
        return code;
    }
};

/// {"command": name} followed by the fields of body.
inline Json with_command(const std::string& name, const Json& body)
{
    Json j{{"command", name}};
    j.update(body, true);
    return j;
}

inline Rational parse_rational_flag(const std::string& text, const char* flag)
{
    try {
        return Rational::parse(text);
    }
    catch (const Error&) {
        throw Error(ErrorCode::ParseError, std::string("--") + flag + ": malformed rational '" + text + "'");
    }
}

struct PairInput {
    std::string a_path, b_path;

    void attach(CLI::App* app)
    {
        app->add_option("--a", a_path, "point file for A (default: JSON pair on stdin)");
        app->add_option("--b", b_path, "point file for B");
    }

    std::pair<PointSet2D, PointSet2D> load(Context& ctx) const
    {
        if (!a_path.empty() && !b_path.empty())
            return {parse_point_set(read_text_file(a_path), a_path), parse_point_set(read_text_file(b_path), b_path)};
        if (!a_path.empty() || !b_path.empty())
            throw Error(ErrorCode::ParseError, "give both --a and --b, or neither and pipe a JSON pair");
        Json j = ctx.stdin_json();
        if (!j.contains("a") || !j.contains("b"))
            throw Error(ErrorCode::ParseError, "<stdin>: JSON needs fields \"a\" and \"b\"");
        return {point_set_from_json(j["a"], "<stdin>.a"), point_set_from_json(j["b"], "<stdin>.b")};
    }
};

struct PolyInput {
    std::string p_path, q_path;

    void attach(CLI::App* app, bool need_q = true)
    {
        app->add_option("--p", p_path, "polygon file for P (default: JSON on stdin)");
        if (need_q)
            app->add_option("--q", q_path, "polygon file for Q");
    }

    ConvexPolygon load_one(Context& ctx) const
    {
        if (!p_path.empty())
            return parse_polygon(read_text_file(p_path), p_path);
        Json j = ctx.stdin_json();
        if (!j.contains("p"))
            throw Error(ErrorCode::ParseError, "<stdin>: JSON needs field \"p\"");
        return polygon_from_json(j["p"], "<stdin>.p");
    }

    std::pair<ConvexPolygon, ConvexPolygon> load(Context& ctx) const
    {
        if (!p_path.empty() && !q_path.empty())
            return {parse_polygon(read_text_file(p_path), p_path), parse_polygon(read_text_file(q_path), q_path)};
        if (!p_path.empty() || !q_path.empty())
            throw Error(ErrorCode::ParseError, "give both --p and --q, or neither and pipe JSON");
        Json j = ctx.stdin_json();
        if (!j.contains("p") || !j.contains("q"))
            throw Error(ErrorCode::ParseError, "<stdin>: JSON needs fields \"p\" and \"q\"");
        return {polygon_from_json(j["p"], "<stdin>.p"), polygon_from_json(j["q"], "<stdin>.q")};
    }
};

/// A single set from --in, a JSON object with "set" or "a", or raw point text on stdin.
inline PointSet2D load_single(Context& ctx, const std::string& path)
{
    if (!path.empty())
        return parse_point_set(read_text_file(path), path);
    const auto& text = ctx.read_stdin();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j = parse_json(text, "<stdin>");
        for (const char* key : {"set", "a"})
            if (j.contains(key))
                return point_set_from_json(j[key], std::string("<stdin>.") + key);
        throw Error(ErrorCode::ParseError, "<stdin>: JSON needs field \"set\" or \"a\"");
    }
    return parse_point_set(text, "<stdin>");
}

inline std::pair<std::size_t, std::size_t> parse_grid(const std::string& text)
{
    auto x = text.find('x');
    try {
        if (x != std::string::npos) {
            std::size_t w = std::stoul(text.substr(0, x)), h = std::stoul(text.substr(x + 1));
            if (std::to_string(w) + "x" + std::to_string(h) == text)
                return {w, h};
        }
    }
    catch (const std::exception&) {
    }
    throw Error(ErrorCode::ParseError, "--grid: expected WxH, got '" + text + "'");
}

/// "v0,v1,..." on indices 0.. or "i:v,i:v,...".
inline SupportedSequence parse_sequence(const std::string& text, const char* flag)
{
    std::map<Rational, Rational> entries;
    std::vector<Rational> plain;
    std::stringstream ss(text);
    std::string item;
    bool keyed = text.find(':') != std::string::npos;
    while (std::getline(ss, item, ',')) {
        if (keyed) {
            auto colon = item.find(':');
            if (colon == std::string::npos)
                throw Error(ErrorCode::ParseError, std::string("--") + flag + ": mixed keyed and plain entries");
            Rational i = parse_rational_flag(item.substr(0, colon), flag);
            if (!entries.emplace(i, parse_rational_flag(item.substr(colon + 1), flag)).second)
                throw Error(ErrorCode::ParseError, std::string("--") + flag + ": repeated index " + i.str());
        }
        else {
            plain.push_back(parse_rational_flag(item, flag));
        }
    }
    if (keyed ? entries.empty() : plain.empty())
        throw Error(ErrorCode::ParseError, std::string("--") + flag + ": empty sequence");
    return keyed ? SupportedSequence(std::move(entries)) : SupportedSequence::consecutive(plain);
}

inline Json pair_json(const char* family, const PointSet2D& a, const PointSet2D& b)
{
    return {{"command", "gen"}, {"family", family}, {"a", to_json(a)}, {"b", to_json(b)},
            {"size_a", a.size()}, {"size_b", b.size()}};
}

inline void write_pair_files(const std::string& prefix, const PointSet2D& a, const std::optional<PointSet2D>& b)
{
    if (prefix.empty())
        return;
    if (!b) {
        write_text_file(prefix, format_point_set(a));
        return;
    }
    write_text_file(prefix + "_a.txt", format_point_set(a));
    write_text_file(prefix + "_b.txt", format_point_set(*b));
}

inline std::vector<Rational> column_guides(const PointSet2D& x)
{
    std::vector<Rational> g;
    for (const auto& [level, pts] : sections_by_level(x, Axis::Vertical))
        g.push_back(level);
    return g;
}

inline Json figure(int which, const std::string& dir, int& code)
{
    std::filesystem::create_directories(dir);
    auto base = (std::filesystem::path(dir) / ("figure" + std::to_string(which))).string();
    Json r{{"command", "figure"}, {"figure", which}};
    bool ok = true;
    if (which == 1) {
        TrapezoidSpec s{6, 19, -1, 2};
        auto t = gen_trapezoid(s);
        std::vector<Rational> cols;
        for (std::size_t x = 0; x < s.m; ++x)
            cols.push_back(column_size(s, x));
        auto rep = bound(BoundMode::Doubling, t, t);
        ok = t.size() == 69 && rep.extremal;
        write_text_file(base + "_a.txt", format_point_set(t));
        write_text_file(base + ".svg", render_svg({SvgPanel{"T(6,19,-1,2)", {t}, column_guides(t)}}));
        r["spec"] = to_json(s);
        r["size"] = t.size();
        r["column_sizes"] = to_json(cols);
        r["doubling"] = to_json(rep);
    }
    else {
        PointSet2D a, b;
        Json params;
        if (which == 2) {
            EpsilonSpec e{{4, 16, 1, 2}, {8, 12, 14}};
            TrapezoidSpec partner{4, 7, 1, 2};
            a = gen_eps_trapezoid(e);
            b = gen_trapezoid(partner);
            params = {{"epsilon", to_json(e)}, {"partner", to_json(partner)}};
        }
        else {
            CaseCSpec c{4, 4, 7};
            std::tie(a, b) = gen_case_c(c);
            params = {{"case_c", to_json(c)}};
        }
        auto rep = bound(BoundMode::SectionsGS, a, b);
        auto cls = classify_thm3(a, b);
        bool split = split_check(a, b);
        const Verdict want = which == 2 ? Verdict::EpsTrapezoidPair : Verdict::CaseCPair;
        ok = rep.extremal && rep.rhs == 133 && cls.verdict == want && split;
        write_text_file(base + "_a.txt", format_point_set(a));
        write_text_file(base + "_b.txt", format_point_set(b));
        write_text_file(base + ".svg", render_svg({SvgPanel{"A", {a}, {}}, SvgPanel{"B", {b}, {}}}));
        r["parameters"] = params;
        r["size_a"] = a.size();
        r["size_b"] = b.size();
        r["bound"] = to_json(rep);
        r["classification"] = to_json(cls);
        r["split"] = split;
    }
    r["files"] = Json::array({base + ".svg"});
    r["verified"] = ok;
    code = ok ? Ok : Failed;
    return r;
}

} // namespace cli

/// Runs one command line. Exit codes: 0 verified, 1 verification failure, 2 input error.
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    using namespace cli;
    Context ctx{in, out, err, false, {}, std::nullopt};

    CLI::App app{"Exact sumset bounds, extremal families and continuous Bonnesen checks.", "sumset"};
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);
    app.add_flag("--approx", ctx.approx, "add decimal approximations under \"approx\"");
    app.add_option("--out", ctx.out_path, "output path (report copy, point files, CSV or figure directory)");
    app.set_version_flag("--version", "sumset 1.0");
    app.fallthrough();

    std::function<int()> action;

    // sumset
    PairInput pin;
    auto* c_sumset = app.add_subcommand("sumset", "Minkowski sum of two point sets");
    pin.attach(c_sumset);
    c_sumset->callback([&] {
        action = [&] {
            auto [a, b] = pin.load(ctx);
            auto s = minkowski_sum(a, b);
            return ctx.emit({{"command", "sumset"}, {"size_a", a.size()}, {"size_b", b.size()}, {"sumset_size", s.size()},
                             {"sumset", to_json(s)}});
        };
    });

    // bound
    std::string mode_text = "LinesGS";
    auto* c_bound = app.add_subcommand("bound", "evaluate a sumset lower bound");
    pin.attach(c_bound);
    c_bound->add_option("--mode", mode_text, "LinesGS|SectionsGS|Doubling|OneDimensional (or lines|sections|doubling|1d)");
    c_bound->callback([&] {
        action = [&] {
            auto mode = parse_bound_mode(mode_text);
            auto [a, b] = pin.load(ctx);
            auto rep = bound(mode, a, b);
            Json j = to_json(rep);
            j["size_a"] = a.size();
            j["size_b"] = b.size();
            return ctx.emit(with_command("bound", j), rep.gap.sign() < 0 ? Failed : Ok);
        };
    });

    // compress
    std::string compress_in;
    auto* c_compress = app.add_subcommand("compress", "horizontal compression of a set, or the compression chain of a pair");
    c_compress->add_option("--in", compress_in, "point file (default: stdin)");
    pin.attach(c_compress);
    c_compress->callback([&] {
        action = [&] {
            bool pair = !pin.a_path.empty() || !pin.b_path.empty();
            if (!pair && compress_in.empty()) {
                auto first = ctx.read_stdin().find_first_not_of(" \t\r\n");
                if (first != std::string::npos && ctx.read_stdin()[first] == '{') {
                    Json j = ctx.stdin_json();
                    pair = j.contains("a") && j.contains("b");
                }
            }
            if (!pair) {
                auto x = compress(load_single(ctx, compress_in));
                return ctx.emit({{"command", "compress"}, {"size", x.size()}, {"compressed", to_json(x)}});
            }
            auto [a, b] = pin.load(ctx);
            auto chain = compression_chain(a, b);
            bool monotone = std::is_sorted(chain.rbegin(), chain.rend());
            return ctx.emit({{"command", "compress"}, {"chain", to_json(chain)}, {"non_increasing", monotone},
                             {"compressed_a", to_json(compress(a))}, {"compressed_b", to_json(compress(b))}},
                            monotone ? Ok : Failed);
        };
    });

    // gen
    auto* c_gen = app.add_subcommand("gen", "generate extremal families");
    c_gen->require_subcommand(1);
    TrapezoidSpec tspec;
    std::string tc = "0", td = "0";
    std::size_t pair_m = 0, pair_h = 0;
    auto* g_trap = c_gen->add_subcommand("trapezoid", "standard trapezoid T(m,h,c,d)");
    g_trap->add_option("--m", tspec.m, "columns")->required();
    g_trap->add_option("--h", tspec.h, "height of the leftmost column")->required();
    g_trap->add_option("--c", tc, "top slope (rational)");
    g_trap->add_option("--d", td, "bottom slope (rational)");
    g_trap->add_option("--pair-m", pair_m, "also emit B = T(pair-m, pair-h, c, d)");
    g_trap->add_option("--pair-h", pair_h, "height of B's leftmost column");
    g_trap->callback([&] {
        action = [&] {
            tspec.c = parse_rational_flag(tc, "c");
            tspec.d = parse_rational_flag(td, "d");
            auto a = gen_trapezoid(tspec);
            if (pair_m == 0 && pair_h == 0) {
                write_pair_files(ctx.out_path, a, std::nullopt);
                return ctx.emit({{"command", "gen"}, {"family", "trapezoid"}, {"spec", to_json(tspec)},
                                 {"size", a.size()}, {"set", to_json(a)}},
                                Ok, false);
            }
            TrapezoidSpec bs{pair_m, pair_h, tspec.c, tspec.d};
            auto b = gen_trapezoid(bs);
            write_pair_files(ctx.out_path, a, b);
            Json j = pair_json("trapezoid", a, b);
            j["spec_a"] = to_json(tspec);
            j["spec_b"] = to_json(bs);
            return ctx.emit(j, Ok, false);
        };
    });

    EpsilonSpec espec;
    std::string ec = "1", ed = "1", ones_text;
    std::size_t partner_n = 0;
    auto* g_eps = c_gen->add_subcommand("eps-trapezoid", "epsilon-standard trapezoid");
    g_eps->add_option("--m", espec.base.m, "columns")->required();
    g_eps->add_option("--h", espec.base.h, "height of the leftmost column")->required();
    g_eps->add_option("--c", ec, "top slope (integer >= 0)");
    g_eps->add_option("--d", ed, "bottom slope (integer >= 0)");
    g_eps->add_option("--ones", ones_text, "comma-separated indices i with epsilon_i = 1");
    g_eps->add_option("--partner-n", partner_n, "also emit B = T(n, (n-1)d+1, c, d)");
    g_eps->callback([&] {
        action = [&] {
            espec.base.c = parse_rational_flag(ec, "c");
            espec.base.d = parse_rational_flag(ed, "d");
            espec.ones.clear();
            if (!ones_text.empty()) {
                std::stringstream ss(ones_text);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    auto v = parse_rational_flag(item, "ones").to_int64();
                    if (!v || !parse_rational_flag(item, "ones").is_integer())
                        throw Error(ErrorCode::ParseError, "--ones: indices must be integers");
                    espec.ones.push_back(*v);
                }
            }
            auto a = gen_eps_trapezoid(espec);
            if (partner_n == 0) {
                write_pair_files(ctx.out_path, a, std::nullopt);
                return ctx.emit({{"command", "gen"}, {"family", "eps-trapezoid"}, {"spec", to_json(espec)},
                                 {"size", a.size()}, {"set", to_json(a)}},
                                Ok, false);
            }
            auto d = espec.base.d.to_int64().value_or(0);
            TrapezoidSpec bs{partner_n, static_cast<std::size_t>((static_cast<std::int64_t>(partner_n) - 1) * d + 1),
                             espec.base.c, espec.base.d};
            auto b = gen_trapezoid(bs);
            write_pair_files(ctx.out_path, a, b);
            Json j = pair_json("eps-trapezoid", a, b);
            j["spec_a"] = to_json(espec);
            j["spec_b"] = to_json(bs);
            return ctx.emit(j, Ok, false);
        };
    });

    CaseCSpec cspec;
    auto* g_casec = c_gen->add_subcommand("case-c", "the case (c) pair");
    g_casec->add_option("--m", cspec.m)->required();
    g_casec->add_option("--n", cspec.n)->required();
    g_casec->add_option("--k", cspec.k, "odd k >= 1")->required();
    g_casec->callback([&] {
        action = [&] {
            auto [a, b] = gen_case_c(cspec);
            write_pair_files(ctx.out_path, a, b);
            Json j = pair_json("case-c", a, b);
            j["spec"] = to_json(cspec);
            return ctx.emit(j, Ok, false);
        };
    });

    std::string wild_x = "4";
    auto* g_wild = c_gen->add_subcommand("wild", "the m = 1 pair with a free parameter x >= 4");
    g_wild->add_option("--x", wild_x, "rational x >= 4");
    g_wild->callback([&] {
        action = [&] {
            auto [a, b] = gen_wild(parse_rational_flag(wild_x, "x"));
            write_pair_files(ctx.out_path, a, b);
            Json j = pair_json("wild", a, b);
            j["x"] = parse_rational_flag(wild_x, "x").str();
            return ctx.emit(j, Ok, false);
        };
    });

    // check
    auto* c_check = app.add_subcommand("check", "structural characterizations");
    c_check->require_subcommand(1);
    auto add_check = [&](const char* name, const char* help, auto fn) {
        auto* sub = c_check->add_subcommand(name, help);
        pin.attach(sub);
        sub->callback([&, fn, name] {
            action = [&, fn, name] {
                auto [a, b] = pin.load(ctx);
                auto [j, code] = fn(a, b);
                return ctx.emit(with_command(std::string("check ") + name, j), code);
            };
        });
    };
    add_check("thm2", "LinesGS extremal pairs are standard trapezoid pairs", [](const PointSet2D& a, const PointSet2D& b) {
        auto c = classify_thm2(a, b);
        bool bad = c.verdict == Verdict::ExtremalUnclassified;
        return std::pair{to_json(c), bad ? Failed : Ok};
    });
    add_check("thm3", "SectionsGS extremal pairs fall in cases (a), (b) or (c)", [](const PointSet2D& a, const PointSet2D& b) {
        auto c = classify_thm3(a, b);
        bool bad = c.verdict == Verdict::ExtremalUnclassified;
        return std::pair{to_json(c), bad ? Failed : Ok};
    });
    add_check("1d", "one-dimensional equality versus the progression condition", [](const PointSet2D& a, const PointSet2D& b) {
        auto c = classify_1d(a, b);
        bool bad = c.one_dimensional->equality != c.one_dimensional->cdt_condition;
        return std::pair{to_json(c), bad ? Failed : Ok};
    });
    add_check("split", "both halves of a SectionsGS extremal pair stay extremal", [](const PointSet2D& a, const PointSet2D& b) {
        bool ok = split_check(a, b);
        return std::pair{Json{{"split", ok}}, ok ? Ok : Failed};
    });
    PolyInput cont_in;
    auto* k_cont = c_check->add_subcommand("continuous", "Bonnesen equality versus homothetic maximal compressions");
    cont_in.attach(k_cont);
    k_cont->callback([&] {
        action = [&] {
            auto [p, q] = cont_in.load(ctx);
            auto rep = bonnesen_report(p, q);
            auto d = decompose_and_classify(p, q);
            return ctx.emit({{"command", "check continuous"}, {"report", to_json(rep)}, {"decomposition", to_json(d)}});
        };
    });

    // sweep
    std::string grid = "3x3", grid_a, grid_b, shard_text, sweep_mode = "LinesGS";
    SweepConfig scfg;
    std::size_t jobs = 1, max_size = 0;
    auto* c_sweep = app.add_subcommand("sweep", "exhaustive search over subset pairs of small grids");
    c_sweep->add_option("--grid", grid, "WxH for both grids");
    c_sweep->add_option("--grid-a", grid_a, "WxH for A's grid");
    c_sweep->add_option("--grid-b", grid_b, "WxH for B's grid");
    c_sweep->add_option("--mode", sweep_mode, "bound mode");
    c_sweep->add_flag("--require-2d", scfg.require_two_dimensional, "skip pairs with a collinear set");
    c_sweep->add_option("--min-mn", scfg.min_mn, "skip pairs whose mode m or n is smaller");
    c_sweep->add_option("--max-size", max_size, "largest subset cardinality (0 = no cap)");
    c_sweep->add_flag("--dedup", scfg.dedup_translations, "keep one representative per translation class");
    c_sweep->add_option("--jobs", jobs, "worker threads");
    c_sweep->add_option("--shard", shard_text, "i/k: run only shard i of k");
    c_sweep->callback([&] {
        action = [&] {
            scfg.mode = parse_bound_mode(sweep_mode);
            std::tie(scfg.width_a, scfg.height_a) = parse_grid(grid_a.empty() ? grid : grid_a);
            std::tie(scfg.width_b, scfg.height_b) = parse_grid(grid_b.empty() ? grid : grid_b);
            if (max_size)
                scfg.max_size_a = scfg.max_size_b = max_size;
            if (!shard_text.empty()) {
                auto slash = shard_text.find('/');
                try {
                    if (slash == std::string::npos)
                        throw std::invalid_argument("shard");
                    scfg.shard_index = std::stoul(shard_text.substr(0, slash));
                    scfg.shard_count = std::stoul(shard_text.substr(slash + 1));
                }
                catch (const std::exception&) {
                    throw Error(ErrorCode::ParseError, "--shard: expected i/k, got '" + shard_text + "'");
                }
                if (jobs > 1)
                    throw Error(ErrorCode::InvalidSpec, "--shard and --jobs cannot be combined");
            }
            auto rep = jobs > 1 ? sweep_parallel(scfg, jobs) : sweep(scfg);
            if (!ctx.out_path.empty()) {
                std::string csv = "kind,key,value\n";
                csv += "count,pairs_checked," + std::to_string(rep.pairs_checked) + "\n";
                csv += "count,extremal," + std::to_string(rep.extremal_count) + "\n";
                for (const auto& [k, v] : rep.classified_tally)
                    csv += "tally," + k + "," + std::to_string(v) + "\n";
                csv += "count,violations," + std::to_string(rep.violations.size()) + "\n";
                csv += "count,unclassified," + std::to_string(rep.unclassified.size()) + "\n";
                write_text_file(ctx.out_path, csv);
            }
            Json j{{"command", "sweep"}, {"mode", to_string(scfg.mode)}, {"ok", rep.ok()}};
            j.update(to_json(rep), true);
            return ctx.emit(j, rep.ok() ? Ok : Failed, false);
        };
    });

    // poly
    auto* c_poly = app.add_subcommand("poly", "convex polygon operations");
    c_poly->require_subcommand(1);
    PolyInput poly_in;
    std::string stretch_h = "0";
    std::size_t parts = 2;
    auto* p_sum = c_poly->add_subcommand("sum", "Minkowski sum of two polygons");
    poly_in.attach(p_sum);
    p_sum->callback([&] {
        action = [&] {
            auto [p, q] = poly_in.load(ctx);
            auto s = poly_minkowski_sum(p, q);
            return ctx.emit({{"command", "poly sum"}, {"sum", to_json(s)}, {"area", area(s).str()}});
        };
    });
    auto* p_report = c_poly->add_subcommand("report", "Bonnesen report");
    poly_in.attach(p_report);
    p_report->callback([&] {
        action = [&] {
            auto [p, q] = poly_in.load(ctx);
            auto rep = bonnesen_report(p, q);
            bool ok = rep.gap.sign() >= 0 && rep.bm_comparison != Ordering::Less;
            return ctx.emit(with_command("poly report", to_json(rep)), ok ? Ok : Failed);
        };
    });
    auto* p_stretch = c_poly->add_subcommand("stretch", "vertical stretch of P by h");
    poly_in.attach(p_stretch, false);
    p_stretch->add_option("--h", stretch_h, "amount h >= 0 (rational)");
    p_stretch->callback([&] {
        action = [&] {
            auto p = poly_in.load_one(ctx);
            auto s = stretch_vertical(p, parse_rational_flag(stretch_h, "h"));
            return ctx.emit({{"command", "poly stretch"}, {"polygon", to_json(s)}, {"area", area(s).str()}});
        };
    });
    auto* p_decompose = c_poly->add_subcommand("decompose", "maximal compressions and homothety certificate");
    poly_in.attach(p_decompose);
    p_decompose->callback([&] {
        action = [&] {
            auto [p, q] = poly_in.load(ctx);
            return ctx.emit(with_command("poly decompose", to_json(decompose_and_classify(p, q))));
        };
    });
    auto* p_partition = c_poly->add_subcommand("partition", "slab pairs of an extremal pair stay extremal");
    poly_in.attach(p_partition);
    p_partition->add_option("--k", parts, "number of slabs");
    p_partition->callback([&] {
        action = [&] {
            auto [p, q] = poly_in.load(ctx);
            bool ok = partition_check(p, q, parts);
            return ctx.emit({{"command", "poly partition"}, {"k", parts}, {"all_extremal", ok}}, ok ? Ok : Failed);
        };
    });
    auto* p_graph = c_poly->add_subcommand("graph-bounds", "lower bounds for graph bodies {0 <= y <= f(x)}");
    poly_in.attach(p_graph);
    p_graph->callback([&] {
        action = [&] {
            auto [p, q] = poly_in.load(ctx);
            return ctx.emit(with_command("poly graph-bounds", to_json(graph_body_bounds(p, q))));
        };
    });

    // lemma-avg
    std::string seq_a, seq_b;
    auto* c_avg = app.add_subcommand("lemma-avg", "averaging inequality for two supported sequences");
    c_avg->add_option("--a", seq_a, "v0,v1,... or i:v,i:v,...")->required();
    c_avg->add_option("--b", seq_b, "v0,v1,... or j:v,j:v,...")->required();
    c_avg->callback([&] {
        action = [&] {
            auto r = averaging_report(parse_sequence(seq_a, "a"), parse_sequence(seq_b, "b"));
            bool ok = r.u_plus_mean >= r.rhs && r.full_mean >= r.u_plus_mean;
            return ctx.emit(with_command("lemma-avg", to_json(r)), ok ? Ok : Failed);
        };
    });

    // figure
    int which = 1;
    auto* c_fig = app.add_subcommand("figure", "reproduce a figure instance as SVG and point files");
    c_fig->add_option("which", which, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
    c_fig->callback([&] {
        action = [&] {
            int code = Ok;
            Json j = cli::figure(which, ctx.out_path.empty() ? "." : ctx.out_path, code);
            return ctx.emit(j, code, false);
        };
    });

    std::vector<std::string> argv_store{"sumset"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store)
        argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Ok : BadInput;
    }
    try {
        return action ? action() : BadInput;
    }
    catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::VerificationFailed ? Failed : BadInput;
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return BadInput;
    }
}

} // namespace sumset

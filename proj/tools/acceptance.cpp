#include <chrono>
#include <cstdio>
#include <functional>

#include "checks.hpp"

using namespace sumset;

int main()
{
    struct Item {
        int id;
        const char* name;
        std::function<checks::Result()> run;
    };
    const std::uint64_t n = 1000;
    const std::vector<Item> items{
        {1, "wild pair, SectionsGS, x=4..8", checks::wild_pipeline},
        {2, "trapezoid pairs LinesGS-extremal", checks::trapezoid_sweep},
        {3, "figure 2 instance", checks::figure2},
        {4, "figure 3 instance", checks::figure3},
        {5, "exhaustive 3x3 sweeps", [] { return checks::grid_sweeps(); }},
        {6, "averaging lemma brute force", checks::averaging_bruteforce},
        {7, "one-dimensional equality", checks::one_dimensional_bruteforce},
        {8, "continuous suite", [] { return checks::continuous_suite(); }},
        {9, "property suites", [n] {
             checks::Result all;
             std::string summary;
             for (auto [name, fn] : std::vector<std::pair<const char*, std::function<checks::Result()>>>{
                      {"compression", [n] { return checks::compression_conservation(n, 1); }},
                      {"chain", [n] { return checks::chain_monotonicity(n, 2); }},
                      {"shards", [n] { return checks::shard_invariance(n, 3); }},
                      {"group", [n] { return checks::classifier_group_invariance(n, 4); }},
                      {"round-trip", [n] { return checks::file_round_trips(n, 5); }}}) {
                 auto r = fn();
                 all.cases += r.cases;
                 summary += std::string(summary.empty() ? "" : ", ") + name + " " + std::to_string(r.cases) +
                            (r.ok ? "" : " FAILED(" + r.detail + ")");
                 all.ok = all.ok && r.ok;
             }
             all.detail = summary;
             return all;
         }},
    };
    int failures = 0;
    for (const auto& item : items) {
        auto t0 = std::chrono::steady_clock::now();
        checks::Result r;
        try {
            r = item.run();
        }
        catch (const std::exception& e) {
            r.ok = false;
            r.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %d: %s  %s  [%s] (%.2f s)\n", item.id, r.ok ? "PASS" : "FAIL", item.name,
                    r.detail.c_str(), secs);
        std::fflush(stdout);
        failures += !r.ok;
    }
    return failures == 0 ? 0 : 1;
}

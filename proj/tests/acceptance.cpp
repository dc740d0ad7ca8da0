// Acceptance checks; prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "cardmatch/bench.hpp"
#include "cardmatch/gabow.hpp"
#include "cardmatch/single_path.hpp"
#include "cardmatch/verify.hpp"
#include "support.hpp"

using namespace cardmatch;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
    std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
    std::fflush(stdout);
    failures += ok ? 0 : 1;
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

// Worst iterations / bound seen so far, where bound = 2*ceil(sqrt(n)) + 2.
struct PhaseBound {
    std::size_t runs = 0;
    std::size_t violations = 0;
    std::string worst;
    double worst_ratio = 0;

    void note(std::size_t n, std::size_t iterations, const std::string& where) {
        ++runs;
        const auto bound = 2 * static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n)))) + 2;
        if (iterations > bound) ++violations;
        const double r = static_cast<double>(iterations) / static_cast<double>(bound);
        if (r > worst_ratio) {
            worst_ratio = r;
            worst = where + ": " + std::to_string(iterations) + " <= " + std::to_string(bound);
        }
    }
} phase_bound;

ExperimentRecord run(Generator gen, std::size_t n, Algorithm alg, std::uint64_t seed = 1, bool permute = false) {
    ExperimentConfig cfg;
    cfg.generator = gen;
    cfg.n = n;
    cfg.permute = permute;
    const StaticGraph g = build_instance(cfg, seed);
    ExperimentRecord r = run_single(g, alg, 1.0, seed);
    if (alg == Algorithm::Gabow || alg == Algorithm::GabowNoHeur)
        phase_bound.note(g.node_count(), static_cast<std::size_t>(r.iterations),
                         std::string(to_string(gen)) + " n=" + std::to_string(n) + " " + to_string(alg) +
                             (permute ? " permuted" : ""));
    return r;
}

void oracle_equivalence() {
    const auto start = Clock::now();
    std::mt19937_64 rng(2024);
    std::size_t bad = 0;
    std::string first;
    for (int t = 0; t < 2000; ++t) {
        const std::size_t n = 1 + rng() % 12;
        const std::size_t m = rng() % 25;
        const std::uint64_t seed = rng();
        const StaticGraph g = generate_random(n, m, seed);
        const std::size_t best = oracle_max_matching(g);
        std::vector<std::pair<std::string, SinglePathResult>> results;
        for (bool heur : {true, false}) {
            GabowOptions opt;
            opt.heur = heur;
            GabowMatcher gm(g, opt);
            SolveResult r = gm.solve();
            phase_bound.note(n, r.iterations, "random small");
            results.push_back({heur ? "gabow" : "gabow-noheur", {r.matching, r.osc, r.counters}});
        }
        results.push_back({"kp", kp_matcher(g, true)});
        results.push_back({"queue", queue_matcher_baseline(g, 1)});
        for (const auto& [name, r] : results) {
            if (r.matching.size() == best && check_matching(g, r.matching) && check_osc(g, r.matching, r.osc))
                continue;
            if (bad++ == 0) first = name + " on n=" + std::to_string(n) + " m=" + std::to_string(m);
        }
    }
    const double secs = seconds_since(start);
    report(1, bad == 0 && secs < 60.0, "oracle equivalence on 2000 random graphs",
           (bad ? std::to_string(bad) + " mismatches, first: " + first + ", " : std::string()) + fmt("%.1f s", secs));
}

void middle_edges_regression() {
    const StaticGraph g = testing::two_paths();
    GabowMatcher gm(g);
    gm.init_with_matching(testing::edges_of(g, {{1, 2}, {5, 6}}));
    gm.setup_weights();
    const bool found = gm.phase_1();
    const auto delta = gm.state().delta;
    const auto& in_h = gm.overlay().is_edge_of_h;
    const bool both = in_h[static_cast<std::size_t>(testing::edge_between(g, 1, 2))] &&
                      in_h[static_cast<std::size_t>(testing::edge_between(g, 5, 6))];
    if (found) gm.phase_2();
    const auto size = gm.matching().size;
    report(2, found && delta == 2 && both && size == 4, "two paths of length three with matched middles",
           "phase_1=" + std::to_string(found) + " delta=" + std::to_string(delta) +
               " middles in H=" + std::to_string(both) + " final size=" + std::to_string(size));
}

void sap_law() {
    std::mt19937_64 rng(77);
    std::size_t paths = 0, phases = 0, bad = 0;
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 2 + rng() % 11;
        const StaticGraph g = generate_random(n, rng() % 25, rng());
        GabowOptions opt;
        opt.heur = false;
        GabowMatcher gm(g, opt);
        gm.set_phase_observer([&](const PhaseReport& r) {
            ++phases;
            const auto sap = oracle_sap_length_mates(g, r.mate_before);
            for (const auto& p : r.lifted_paths) {
                ++paths;
                const std::size_t len = 2 * p.size() - 1;
                if (!sap || len != *sap || static_cast<std::int64_t>(len) != 2 * r.delta - 1) ++bad;
            }
        });
        SolveResult res = gm.solve();
        phase_bound.note(n, res.iterations, "sap law");
    }
    report(3, bad == 0 && paths > 0, "lifted paths have length 2*Delta-1 = shortest augmenting path",
           std::to_string(paths) + " paths in " + std::to_string(phases) + " phases, " + std::to_string(bad) +
               " violations");
}

void short_chains() {
    std::string detail;
    bool ok = true;
    for (std::size_t n : {10000u, 20000u, 40000u}) {
        const auto r = run(Generator::Worst0, n, Algorithm::GabowNoHeur);
        ok = ok && r.iterations == 2;
        detail += (detail.empty() ? "" : ", ") + std::to_string(n) + ": " + fmt("%.0f", r.iterations);
    }
    report(5, ok, "short chains, canonical, no finisher: 2 iterations", detail);
}

void long_chains() {
    const auto start = Clock::now();
    const double expect[] = {33, 47, 66};
    const std::size_t sizes[] = {10000, 20000, 40000};
    double got[3];
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 3; ++i) {
        got[i] = run(Generator::Worst1, sizes[i], Algorithm::Gabow).iterations;
        ok = ok && std::abs(got[i] - expect[i]) <= 0.2 * expect[i];
        detail += std::to_string(sizes[i]) + ": " + fmt("%.0f", got[i]) + fmt(" (expect %.0f), ", expect[i]);
    }
    const double ratio = got[2] / got[0];
    ok = ok && ratio >= 1.8 && ratio <= 2.2;
    const double secs = seconds_since(start);
    ok = ok && secs < 120.0;
    report(6, ok, "long chains, canonical: iterations and quadrupling law",
           detail + fmt("ratio %.3f, ", ratio) + fmt("%.1f s", secs));
}

void scan_growth() {
    const auto start = Clock::now();
    auto ratio = [](Generator gen) {
        const double a = run(gen, 100000, Algorithm::Gabow).edge_scans;
        const double b = run(gen, 200000, Algorithm::Gabow).edge_scans;
        return b / a;
    };
    const double r1 = ratio(Generator::Worst1);
    const double r0 = ratio(Generator::Worst0);
    const double secs = seconds_since(start);
    const bool ok = r1 >= 2.4 && r1 <= 3.2 && r0 >= 1.8 && r0 <= 2.2 && secs < 300.0;
    report(7, ok, "edge scan growth from n=1e5 to 2e5",
           fmt("worst1 %.3f, ", r1) + fmt("worst0 %.3f, ", r0) + fmt("%.1f s", secs));
}

void random_growth() {
    const auto start = Clock::now();
    const double expect[] = {8.1, 9.2, 9.9};
    const std::size_t sizes[] = {80000, 160000, 320000};
    double mean[3];
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 3; ++i) {
        double sum = 0;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) sum += run(Generator::Random, sizes[i], Algorithm::Gabow, seed).iterations;
        mean[i] = sum / 10;
        ok = ok && std::abs(mean[i] - expect[i]) <= 2.0;
        if (i > 0) ok = ok && mean[i] >= mean[i - 1];
        detail += std::to_string(sizes[i]) + ": " + fmt("%.1f", mean[i]) + fmt(" (expect %.1f), ", expect[i]);
    }
    const double secs = seconds_since(start);
    ok = ok && secs < 300.0;
    report(8, ok, "random graphs, mean iterations over 10 seeds", detail + fmt("%.1f s", secs));
}

void phase_bound_sweep() {
    for (Generator gen : {Generator::Worst0, Generator::Worst1})
        for (std::size_t n : {1000u, 10000u, 100000u})
            for (Algorithm alg : {Algorithm::Gabow, Algorithm::GabowNoHeur})
                for (bool permute : {false, true}) run(gen, n, alg, 1, permute);
    for (std::size_t n : {1000u, 10000u, 100000u})
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            run(Generator::Random, n, Algorithm::Gabow, seed);
            run(Generator::Random, n, Algorithm::GabowNoHeur, seed);
        }
}

}  // namespace

int main() {
    oracle_equivalence();
    middle_edges_regression();
    sap_law();
    short_chains();
    long_chains();
    scan_growth();
    random_growth();
    phase_bound_sweep();
    report(4, phase_bound.violations == 0, "iterations <= 2*ceil(sqrt(n))+2 on every run above",
           std::to_string(phase_bound.runs) + " runs, " + std::to_string(phase_bound.violations) +
               " violations, tightest " + phase_bound.worst);
    std::printf("N/A  criterion 9: wall-clock tables are hardware specific and not reproduced; "
                "criteria 7 and 8 stand in for them\n");
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}

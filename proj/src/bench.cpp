#include "cardmatch/bench.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <tuple>

#include "cardmatch/gabow.hpp"
#include "cardmatch/single_path.hpp"
#include "cardmatch/verify.hpp"

namespace cardmatch {

const char* to_string(Algorithm a) {
    switch (a) {
        case Algorithm::Gabow: return "gabow";
        case Algorithm::GabowNoHeur: return "gabow-noheur";
        case Algorithm::Kp: return "kp";
        case Algorithm::Queue: return "queue";
    }
    return "?";
}

const char* to_string(Generator g) {
    switch (g) {
        case Generator::Random: return "random";
        case Generator::Worst0: return "worst0";
        case Generator::Worst1: return "worst1";
        case Generator::File: return "file";
    }
    return "?";
}

std::size_t ExperimentConfig::reps() const {
    if (repetitions) return *repetitions;
    return generator == Generator::Random || permute ? 10 : 1;
}

StaticGraph build_instance(const ExperimentConfig& cfg, std::uint64_t seed) {
    StaticGraph g;
    switch (cfg.generator) {
        case Generator::Random: g = generate_random(cfg.n, cfg.edge_target(), seed); break;
        case Generator::Worst0: g = generate_worst_case(cfg.n, cfg.edge_target(), 0).graph; break;
        case Generator::Worst1: g = generate_worst_case(cfg.n, cfg.edge_target(), 1).graph; break;
        case Generator::File: g = read_edge_list(cfg.input_path); break;
    }
    if (cfg.permute) g = permute_representation(g, seed ^ 0x9e3779b97f4a7c15ULL);
    return g;
}

ExperimentRecord run_single(const StaticGraph& g, Algorithm alg, double heur_factor, std::uint64_t seed) {
    ExperimentRecord r;
    r.algorithm = to_string(alg);
    r.n = g.node_count();
    r.m = g.edge_count();
    r.seed = seed;
    std::vector<EdgeId> matching;
    OddSetCover osc;
    OpCounters counters;
    const auto start = std::chrono::steady_clock::now();
    switch (alg) {
        case Algorithm::Gabow:
        case Algorithm::GabowNoHeur: {
            GabowOptions opt;
            opt.heur = alg == Algorithm::Gabow;
            opt.heur_factor = heur_factor;
            GabowMatcher solver(g, opt);
            SolveResult res = solver.solve();
            matching = std::move(res.matching);
            osc = std::move(res.osc);
            counters = res.counters;
            r.iterations = static_cast<double>(res.iterations);
            break;
        }
        case Algorithm::Kp:
        case Algorithm::Queue: {
            SinglePathResult res = alg == Algorithm::Kp ? kp_matcher(g, true) : queue_matcher_baseline(g, 1);
            matching = std::move(res.matching);
            osc = std::move(res.osc);
            counters = res.counters;
            break;
        }
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::string why;
    if (!check_matching(g, matching, &why))
        throw VerificationError(std::string(r.algorithm) + ": invalid matching: " + why, seed);
    if (!check_osc(g, matching, osc, &why))
        throw VerificationError(std::string(r.algorithm) + ": certificate rejected: " + why, seed);
    r.matching_size = static_cast<double>(matching.size());
    r.edge_scans = static_cast<double>(counters.edge_scans);
    r.unions = static_cast<double>(counters.unions);
    r.queue_ops = static_cast<double>(counters.queue_ops);
    return r;
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg) {
    const std::size_t reps = cfg.reps();
    std::vector<std::vector<ExperimentRecord>> per_alg(cfg.algorithms.size());
    for (std::size_t rep = 0; rep < reps; ++rep) {
        const std::uint64_t seed = cfg.seed + rep;
        const StaticGraph g = build_instance(cfg, seed);
        for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
            ExperimentRecord r = run_single(g, cfg.algorithms[a], cfg.heur_factor, seed);
            r.generator = to_string(cfg.generator);
            r.permuted = cfg.permute;
            if (cfg.generator != Generator::File) {
                r.n = cfg.n;
                r.m = cfg.edge_target();
            }
            if (a > 0 && r.matching_size != per_alg[0].back().matching_size)
                throw VerificationError("matching sizes differ between algorithms", seed);
            per_alg[a].push_back(std::move(r));
        }
    }
    std::vector<ExperimentRecord> out;
    for (auto& runs : per_alg) {
        ExperimentRecord mean = runs.front();
        mean.mean = true;
        mean.seed = cfg.seed;
        mean.repetitions = reps;
        mean.matching_size = mean.iterations = mean.edge_scans = mean.unions = mean.queue_ops = mean.wall_ms = 0;
        for (const auto& r : runs) {
            mean.matching_size += r.matching_size;
            mean.iterations += r.iterations;
            mean.edge_scans += r.edge_scans;
            mean.unions += r.unions;
            mean.queue_ops += r.queue_ops;
            mean.wall_ms += r.wall_ms;
        }
        const auto k = static_cast<double>(runs.size());
        mean.matching_size /= k;
        mean.iterations /= k;
        mean.edge_scans /= k;
        mean.unions /= k;
        mean.queue_ops /= k;
        mean.wall_ms /= k;
        for (auto& r : runs) out.push_back(std::move(r));
        out.push_back(std::move(mean));
    }
    return out;
}

std::string csv_header() {
    return "algorithm,generator,n,m,permuted,seed,repetitions,matching_size,iterations,edge_scans,unions,"
           "queue_ops,wall_ms";
}

std::string to_csv_row(const ExperimentRecord& r) {
    auto num = [&r](double v) {
        char buf[64];
        if (r.mean)
            std::snprintf(buf, sizeof buf, "%.3f", v);
        else
            std::snprintf(buf, sizeof buf, "%.0f", v);
        return std::string(buf);
    };
    char wall[64];
    std::snprintf(wall, sizeof wall, "%.3f", r.wall_ms);
    return r.algorithm + "," + r.generator + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," +
           (r.permuted ? "1" : "0") + "," + std::to_string(r.seed) + "," + std::to_string(r.repetitions) + "," +
           num(r.matching_size) + "," + num(r.iterations) + "," + num(r.edge_scans) + "," + num(r.unions) + "," +
           num(r.queue_ops) + "," + wall;
}

std::vector<RatioRow> counters_report(std::span<const ExperimentRecord> records) {
    bool have_mean = false;
    for (const auto& r : records) have_mean = have_mean || r.mean;
    using Key = std::tuple<std::string, std::string, bool>;
    std::map<Key, std::map<std::size_t, double>> scans;
    for (const auto& r : records) {
        if (have_mean && !r.mean) continue;
        auto& slot = scans[{r.algorithm, r.generator, r.permuted}];
        if (slot.count(r.n)) throw std::invalid_argument("counters_report: duplicate record for one size");
        slot[r.n] = r.edge_scans;
    }
    std::vector<RatioRow> out;
    for (const auto& [key, by_n] : scans)
        for (const auto& [n, s] : by_n) {
            auto it = by_n.find(2 * n);
            if (it == by_n.end()) continue;
            if (s <= 0) throw std::invalid_argument("counters_report: zero edge scans");
            out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), n, it->second / s});
        }
    if (out.empty()) throw std::invalid_argument("need two sizes");
    return out;
}

}  // namespace cardmatch

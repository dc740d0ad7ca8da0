#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cardmatch/graph.hpp"

namespace cardmatch {

enum class Algorithm { Gabow, GabowNoHeur, Kp, Queue };
enum class Generator { Random, Worst0, Worst1, File };

const char* to_string(Algorithm a);
const char* to_string(Generator g);

struct ExperimentConfig {
    Generator generator = Generator::Random;
    std::size_t n = 1000;
    std::optional<std::size_t> m;  // defaults to 4n
    std::vector<Algorithm> algorithms{Algorithm::Gabow};
    std::uint64_t seed = 1;
    std::optional<std::size_t> repetitions;  // 10 for random or permuted, else 1
    bool permute = false;
    double heur_factor = 1.0;
    std::string input_path;  // used when generator == File

    std::size_t edge_target() const { return m.value_or(4 * n); }
    std::size_t reps() const;
};

// One CSV row. Per-run rows carry repetitions = 1 and the seed actually
// used; the mean row of an algorithm carries the configured count and the
// base seed, and its numeric columns are averages. n and m are the
// generator parameters (the worst-case instances have more nodes and
// edges than requested); for an input file they are the actual counts.
struct ExperimentRecord {
    std::string algorithm;
    std::string generator;
    std::size_t n = 0;
    std::size_t m = 0;
    bool permuted = false;
    std::uint64_t seed = 0;
    std::size_t repetitions = 1;
    double matching_size = 0;
    double iterations = 0;
    double edge_scans = 0;
    double unions = 0;
    double queue_ops = 0;
    double wall_ms = 0;
    bool mean = false;
};

class VerificationError : public std::runtime_error {
public:
    VerificationError(const std::string& what, std::uint64_t seed)
        : std::runtime_error(what), seed_(seed) {}
    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
};

StaticGraph build_instance(const ExperimentConfig& cfg, std::uint64_t seed);

// Runs one engine and checks matching and cover; throws VerificationError.
ExperimentRecord run_single(const StaticGraph& g, Algorithm alg, double heur_factor, std::uint64_t seed);

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg);

std::string csv_header();
std::string to_csv_row(const ExperimentRecord& r);

struct RatioRow {
    std::string algorithm;
    std::string generator;
    bool permuted = false;
    std::size_t n = 0;
    double edge_scan_ratio = 0;
};

// edge_scans(2n)/edge_scans(n) for every configuration present at both
// sizes. Mean rows are used when present.
std::vector<RatioRow> counters_report(std::span<const ExperimentRecord> records);

}  // namespace cardmatch

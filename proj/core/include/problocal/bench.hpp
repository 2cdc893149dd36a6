#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace problocal {

/// One benchmark/verification experiment. A spec is fully serializable and
/// re-running it reproduces byte-identical output rows.
struct ExperimentSpec {
    std::string algorithm;       // color|orient|mis|mm|color-seq|mcm|mwm|dist:<alg>
    std::string graph;           // file path or generator spec (ring:n, rr:n:d:seed, ...)
    std::string eps;             // rational, required by mcm/mwm
    std::string queries = "all"; // "all" | "sample:<count>"
    std::uint64_t seed = 0;      // query-sampling seed
    bool verify = false;         // run the exhaustive oracle and report the ratio
    bool random_weights = false; // attach deterministic weights to generated graphs
    std::uint64_t weight_seed = 1;
};

struct BenchRow {
    std::string algorithm;
    std::uint32_t n = 0;
    std::uint32_t delta = 0;
    std::string eps;
    std::uint64_t queries = 0;
    std::uint64_t probes_max = 0;
    double probes_mean = 0.0;
    std::uint32_t radius_max = 0;
    std::int64_t rounds = -1; // distributed runs only
    std::string value;
    std::string optimum;
    std::string ratio;
};

BenchRow run_experiment(const ExperimentSpec& spec);

std::string bench_csv_header();
std::string bench_row_csv(const BenchRow& row);
std::string bench_rows_json(const std::vector<BenchRow>& rows);

/// Parses a JSON array of experiment specs (see README for the fields).
std::vector<ExperimentSpec> parse_experiment_specs(const std::string& json_text);

} // namespace problocal

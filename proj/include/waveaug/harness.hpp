#pragma once

#include <map>
#include <string>
#include <vector>

#include "waveaug/augment.hpp"
#include "waveaug/data.hpp"
#include "waveaug/model.hpp"

namespace waveaug {

/// Either a CSV on disk or the built-in synthetic generator.
struct DatasetSpec {
    std::string name;
    std::string path;             // CSV mode
    bool synthetic = false;       // generator mode
    Eigen::Index timesteps = 3000;
    Eigen::Index channels = 2;
    std::uint64_t seed = 7;
    double noise_std = 0.3;
};

struct ExperimentSpec {
    DatasetSpec dataset;
    int lookback = 336;
    std::vector<int> horizons;
    std::vector<std::string> methods;
    // policy per (method, horizon); resolved during parsing, horizon -1 = default
    std::map<std::pair<std::string, int>, AugmentationPolicy> policies;
    TrainConfig train;
    int n_repeats = 10;
    std::vector<double> downsample_fractions;  // empty means {1.0}
    std::string out_dir = "out";

    /// The unique policy for a (method, horizon) pair.
    AugmentationPolicy resolve_policy(const std::string& method, int horizon) const;
};

struct ResultRecord {
    std::string dataset;
    int horizon = 0;
    std::string method;
    std::uint64_t seed = 0;
    double fraction = 1.0;
    double mse = 0.0, mae = 0.0;
    int best_epoch = 0;
    double wall_time = 0.0;  // informational; never written to the ledger
};

struct AggregateRow {
    std::string dataset;
    std::string method;
    int horizon = 0;
    double fraction = 1.0;
    int n = 0;
    double mse_mean = 0.0, mse_std = 0.0, mae_mean = 0.0, mae_std = 0.0;
    int rank = 0;  // 1 = best MSE within (dataset, horizon, fraction)
};

/// Parses and fully validates a JSON experiment config (grammar in README);
/// unknown keys are errors.
ExperimentSpec parse_config(const std::string& path);

/// Runs every (fraction, horizon, method, seed) combination, appending each
/// result to <out_dir>/ledger.jsonl as it completes. Combinations already in
/// the ledger are skipped, so interrupted runs resume.
std::vector<ResultRecord> run_experiment(const ExperimentSpec& spec);

std::vector<ResultRecord> read_ledger(const std::string& path);

/// Mean and sample standard deviation (n-1; zero for n = 1) per group, with
/// per-(dataset, horizon, fraction) MSE ranks.
std::vector<AggregateRow> aggregate(const std::vector<ResultRecord>& records);

/// Writes <out_dir>/metrics.csv and, when several fractions are present,
/// <out_dir>/coldstart_<dataset>.csv with best-of-family MSE per fraction.
void emit_report(const std::vector<AggregateRow>& aggregates, const std::string& out_dir);

/// Loads the dataset a spec points at (CSV or synthetic).
Dataset load_dataset(const DatasetSpec& spec);

}  // namespace waveaug

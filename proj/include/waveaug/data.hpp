#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "waveaug/series.hpp"

namespace waveaug {

struct Dataset {
    std::string name;
    Eigen::MatrixXd values;                // timesteps x channels
    std::vector<std::string> timestamps;   // optional, same length as rows

    Eigen::Index timesteps() const { return values.rows(); }
    Eigen::Index channels() const { return values.cols(); }
};

struct ForecastTask {
    int lookback = 336;
    int horizon = 96;
    std::string dataset;
};

/// Half-open index range into a dataset's time axis.
struct Range {
    Eigen::Index begin = 0;
    Eigen::Index end = 0;
    Eigen::Index length() const { return end - begin; }
};

struct SplitRanges {
    Range train, val, test;
};

/// Reads a CSV with a header row, a leading timestamp column and numeric
/// channels. Rejects NaN/empty cells with the offending row and column.
Dataset load_csv(const std::string& path, const std::string& name = "");

/// Chronological 6:2:2 split; val and test begin lookback steps early so
/// their first windows have full look-backs.
SplitRanges split_622(Eigen::Index timesteps, Eigen::Index lookback);

/// Per-channel z-score statistics fitted on the training range only.
class Normalizer {
public:
    static Normalizer fit(const Eigen::MatrixXd& values, Range train_range);
    Eigen::MatrixXd apply(const Eigen::MatrixXd& values) const;
    Eigen::MatrixXd invert(const Eigen::MatrixXd& values) const;
    const Eigen::VectorXd& mean() const { return mean_; }
    const Eigen::VectorXd& stddev() const { return std_; }

private:
    Eigen::VectorXd mean_, std_;
};

/// Stride-1 sliding windows over a range: n = range_len - t_lb - h + 1 pairs.
std::pair<SeriesTensor, SeriesTensor> make_windows(const Eigen::MatrixXd& values, Range range,
                                                   const ForecastTask& task);

/// Keeps the most recent floor(keep_fraction * len) timesteps of the training
/// range; errors if fewer than one full window remains.
Range downsample_train(Range train_range, double keep_fraction, const ForecastTask& task);

/// Seasonal synthetic benchmark: per-channel sinusoid mixture plus mild trend
/// and Gaussian-ish noise. Deterministic in (timesteps, channels, seed).
Dataset make_synthetic_seasonal(Eigen::Index timesteps, Eigen::Index channels,
                                std::uint64_t seed, double noise_std);

}  // namespace waveaug

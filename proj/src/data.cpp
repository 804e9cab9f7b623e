#include "waveaug/data.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "waveaug/rng.hpp"

namespace waveaug {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

double parse_cell(const std::string& cell, size_t row, size_t col) {
    const char* begin = cell.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    while (end && *end == ' ') ++end;
    if (cell.empty() || end != begin + cell.size() || std::isnan(v))
        throw std::runtime_error("bad numeric cell at row " + std::to_string(row) + ", column " +
                                 std::to_string(col) + ": '" + cell + "'");
    return v;
}

}  // namespace

Dataset load_csv(const std::string& path, const std::string& name) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty dataset '" + path + "'");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto header = split_line(line);
    if (header.size() < 2)
        throw std::runtime_error("dataset '" + path + "' needs a timestamp column and >= 1 channel");
    for (size_t i = 1; i < header.size(); ++i)
        for (size_t j = i + 1; j < header.size(); ++j)
            if (header[i] == header[j])
                throw std::runtime_error("duplicate header column '" + header[i] + "'");
    const size_t k = header.size() - 1;

    std::vector<std::string> stamps;
    std::vector<double> flat;
    size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto cells = split_line(line);
        if (cells.size() != header.size())
            throw std::runtime_error("row " + std::to_string(row) + " has " +
                                     std::to_string(cells.size()) + " cells, expected " +
                                     std::to_string(header.size()));
        stamps.push_back(cells[0]);
        for (size_t c = 1; c < cells.size(); ++c) flat.push_back(parse_cell(cells[c], row, c));
    }
    if (stamps.empty()) throw std::runtime_error("dataset '" + path + "' has no data rows");

    Dataset ds;
    ds.name = name.empty() ? path : name;
    ds.timestamps = std::move(stamps);
    ds.values.resize(static_cast<Eigen::Index>(ds.timestamps.size()), static_cast<Eigen::Index>(k));
    for (Eigen::Index t = 0; t < ds.values.rows(); ++t)
        for (Eigen::Index c = 0; c < ds.values.cols(); ++c)
            ds.values(t, c) = flat[static_cast<size_t>(t) * k + static_cast<size_t>(c)];
    return ds;
}

SplitRanges split_622(Eigen::Index timesteps, Eigen::Index lookback) {
    if (timesteps < 10) throw std::invalid_argument("split_622: need at least 10 timesteps");
    const Eigen::Index n_train = timesteps * 6 / 10;
    const Eigen::Index n_val = timesteps * 2 / 10;
    SplitRanges s;
    s.train = {0, n_train};
    s.val = {std::max<Eigen::Index>(0, n_train - lookback), n_train + n_val};
    s.test = {std::max<Eigen::Index>(0, n_train + n_val - lookback), timesteps};
    return s;
}

Normalizer Normalizer::fit(const Eigen::MatrixXd& values, Range train_range) {
    if (train_range.length() < 1) throw std::invalid_argument("Normalizer: empty train range");
    const auto block = values.middleRows(train_range.begin, train_range.length());
    Normalizer n;
    n.mean_ = block.colwise().mean();
    n.std_.resize(values.cols());
    for (Eigen::Index c = 0; c < values.cols(); ++c) {
        const double var =
            (block.col(c).array() - n.mean_[c]).square().mean();
        n.std_[c] = std::sqrt(var);
        if (!(n.std_[c] > 0.0))
            throw std::runtime_error("zero-variance channel " + std::to_string(c) +
                                     " in training range");
    }
    return n;
}

Eigen::MatrixXd Normalizer::apply(const Eigen::MatrixXd& values) const {
    return (values.rowwise() - mean_.transpose()).array().rowwise() /
           std_.transpose().array();
}

Eigen::MatrixXd Normalizer::invert(const Eigen::MatrixXd& values) const {
    return (values.array().rowwise() * std_.transpose().array()).matrix().rowwise() +
           mean_.transpose();
}

std::pair<SeriesTensor, SeriesTensor> make_windows(const Eigen::MatrixXd& values, Range range,
                                                   const ForecastTask& task) {
    const Eigen::Index t_lb = task.lookback, h = task.horizon;
    const Eigen::Index n = range.length() - t_lb - h + 1;
    if (n < 1)
        throw std::invalid_argument("range of length " + std::to_string(range.length()) +
                                    " too short for lookback " + std::to_string(t_lb) +
                                    " + horizon " + std::to_string(h));
    SeriesTensor x(n, t_lb, values.cols());
    SeriesTensor y(n, h, values.cols());
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::Index base = range.begin + i;
        for (Eigen::Index c = 0; c < values.cols(); ++c) {
            x.channel(i, c) = values.col(c).segment(base, t_lb);
            y.channel(i, c) = values.col(c).segment(base + t_lb, h);
        }
    }
    return {std::move(x), std::move(y)};
}

Range downsample_train(Range train_range, double keep_fraction, const ForecastTask& task) {
    if (!(keep_fraction > 0.0 && keep_fraction <= 1.0))
        throw std::invalid_argument("downsample_train: keep_fraction must be in (0, 1]");
    const Eigen::Index keep = static_cast<Eigen::Index>(
        std::floor(keep_fraction * static_cast<double>(train_range.length())));
    if (keep < task.lookback + task.horizon)
        throw std::invalid_argument("downsample_train: only " + std::to_string(keep) +
                                    " timesteps left, need " +
                                    std::to_string(task.lookback + task.horizon));
    return {train_range.end - keep, train_range.end};
}

Dataset make_synthetic_seasonal(Eigen::Index timesteps, Eigen::Index channels,
                                std::uint64_t seed, double noise_std) {
    Dataset ds;
    ds.name = "synthetic";
    ds.values.resize(timesteps, channels);
    Rng rng(seed);
    constexpr double tau = 2.0 * std::numbers::pi;
    for (Eigen::Index c = 0; c < channels; ++c) {
        const double p1 = 24.0 + 8.0 * static_cast<double>(c);
        const double p2 = 7.3 * (static_cast<double>(c) + 1.5);
        const double phase1 = rng.uniform() * tau;
        const double phase2 = rng.uniform() * tau;
        const double slope = (rng.uniform() - 0.5) * 2e-4;
        for (Eigen::Index t = 0; t < timesteps; ++t) {
            // sum of 12 uniforms approximates a unit normal
            double noise = 0.0;
            for (int i = 0; i < 12; ++i) noise += rng.uniform();
            noise -= 6.0;
            ds.values(t, c) = std::sin(tau * static_cast<double>(t) / p1 + phase1) +
                              0.5 * std::sin(tau * static_cast<double>(t) / p2 + phase2) +
                              slope * static_cast<double>(t) + noise_std * noise;
        }
    }
    return ds;
}

}  // namespace waveaug

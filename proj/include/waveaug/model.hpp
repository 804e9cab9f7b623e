#pragma once

#include <string>
#include <vector>

#include "waveaug/augment.hpp"
#include "waveaug/rng.hpp"
#include "waveaug/series.hpp"

namespace waveaug {

/// DLinear parameters: one linear head for the moving-average trend, one for
/// the residual, weights shared across channels.
struct DLinearParams {
    Eigen::MatrixXd w_trend;  // h x t_lb
    Eigen::VectorXd b_trend;  // h
    Eigen::MatrixXd w_resid;  // h x t_lb
    Eigen::VectorXd b_resid;  // h
    int kernel = 25;          // moving-average width, odd

    static DLinearParams zeros(Eigen::Index lookback, Eigen::Index horizon, int kernel);
};

struct DLinearGrads {
    Eigen::MatrixXd w_trend;
    Eigen::VectorXd b_trend;
    Eigen::MatrixXd w_resid;
    Eigen::VectorXd b_resid;
};

/// Centered moving average with edge-replication padding; residual is the
/// exact remainder, so trend + residual == x.
std::pair<SeriesTensor, SeriesTensor> series_decompose(const SeriesTensor& x, int kernel);
std::pair<Eigen::VectorXd, Eigen::VectorXd> series_decompose(const Eigen::VectorXd& x, int kernel);

SeriesTensor dlinear_forward(const DLinearParams& params, const SeriesTensor& x);

double mse_loss(const SeriesTensor& pred, const SeriesTensor& target);
double mae_loss(const SeriesTensor& pred, const SeriesTensor& target);

/// Analytic gradients of mse_loss(dlinear_forward(params, x), target).
DLinearGrads dlinear_backward(const DLinearParams& params, const SeriesTensor& x,
                              const SeriesTensor& target);

struct AdamState {
    Eigen::MatrixXd m_wt, v_wt, m_wr, v_wr;
    Eigen::VectorXd m_bt, v_bt, m_br, v_br;
    long step = 0;

    static AdamState zeros_like(const DLinearParams& p);
};

/// Standard adaptive-moment update with beta1=0.9, beta2=0.999, eps=1e-8 and
/// bias correction.
void adam_step(DLinearParams& params, const DLinearGrads& grads, AdamState& state, double lr);

struct TrainConfig {
    int epochs = 30;
    int patience = 12;
    int batch_size = 64;
    double learning_rate = 0.005;
    double lr_decay = 0.5;  // per-epoch multiplier from epoch 2; 1.0 disables
    int kernel = 25;
    std::uint64_t seed = 0;
    AugmentationPolicy policy;
};

struct TrainResult {
    DLinearParams best_params;
    int best_epoch = 0;  // 1-based
    std::vector<double> train_loss;  // per epoch, on augmented batches
    std::vector<double> val_loss;    // per epoch
};

/// Trains with per-batch augmentation (training split only), tracks
/// validation MSE, returns the best-validation parameters. Stops early after
/// cfg.patience epochs without improvement.
TrainResult train(const SeriesTensor& train_x, const SeriesTensor& train_y,
                  const SeriesTensor& val_x, const SeriesTensor& val_y, const TrainConfig& cfg);

/// Un-augmented metrics over a window set.
std::pair<double, double> evaluate(const DLinearParams& params, const SeriesTensor& test_x,
                                   const SeriesTensor& test_y);

/// Versioned textual checkpoint (shape header + full-precision entries).
void save_params(const DLinearParams& params, const std::string& path);
DLinearParams load_params(const std::string& path);

}  // namespace waveaug

#include "waveaug/model.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace waveaug {

namespace {

constexpr double kBeta1 = 0.9;
constexpr double kBeta2 = 0.999;
constexpr double kEps = 1e-8;

void check_kernel(int kernel, Eigen::Index t_lb) {
    if (kernel < 1 || kernel % 2 == 0)
        throw std::invalid_argument("moving-average kernel must be odd and >= 1");
    if (kernel > 2 * t_lb)
        throw std::invalid_argument("moving-average kernel too wide for the look-back");
}

Eigen::VectorXd moving_average(const Eigen::VectorXd& x, int kernel) {
    const Eigen::Index n = x.size();
    const Eigen::Index half = (kernel - 1) / 2;
    Eigen::VectorXd padded(n + 2 * half);
    padded.segment(half, n) = x;
    padded.head(half).setConstant(x[0]);
    padded.tail(half).setConstant(x[n - 1]);
    Eigen::VectorXd trend(n);
    double acc = padded.head(kernel).sum();
    trend[0] = acc / kernel;
    for (Eigen::Index t = 1; t < n; ++t) {
        acc += padded[t + kernel - 1] - padded[t - 1];
        trend[t] = acc / kernel;
    }
    return trend;
}

void check_same_shape(const SeriesTensor& a, const SeriesTensor& b, const char* who) {
    if (!a.same_shape(b)) throw std::invalid_argument(std::string(who) + ": shape mismatch");
}

}  // namespace

DLinearParams DLinearParams::zeros(Eigen::Index lookback, Eigen::Index horizon, int kernel) {
    check_kernel(kernel, lookback);
    DLinearParams p;
    p.w_trend = Eigen::MatrixXd::Zero(horizon, lookback);
    p.b_trend = Eigen::VectorXd::Zero(horizon);
    p.w_resid = Eigen::MatrixXd::Zero(horizon, lookback);
    p.b_resid = Eigen::VectorXd::Zero(horizon);
    p.kernel = kernel;
    return p;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> series_decompose(const Eigen::VectorXd& x,
                                                             int kernel) {
    check_kernel(kernel, x.size());
    Eigen::VectorXd trend = moving_average(x, kernel);
    return {trend, x - trend};
}

std::pair<SeriesTensor, SeriesTensor> series_decompose(const SeriesTensor& x, int kernel) {
    check_kernel(kernel, x.time());
    SeriesTensor trend(x.rows(), x.time(), x.channels());
    SeriesTensor resid(x.rows(), x.time(), x.channels());
    for (Eigen::Index r = 0; r < x.rows(); ++r)
        for (Eigen::Index c = 0; c < x.channels(); ++c) {
            Eigen::VectorXd t = moving_average(x.channel(r, c), kernel);
            trend.channel(r, c) = t;
            resid.channel(r, c) = x.channel(r, c) - t;
        }
    return {std::move(trend), std::move(resid)};
}

SeriesTensor dlinear_forward(const DLinearParams& params, const SeriesTensor& x) {
    if (x.time() != params.w_trend.cols())
        throw std::invalid_argument("dlinear_forward: look-back length mismatch");
    const Eigen::Index h = params.w_trend.rows();
    auto [trend, resid] = series_decompose(x, params.kernel);
    SeriesTensor out(x.rows(), h, x.channels());
    for (Eigen::Index r = 0; r < x.rows(); ++r)
        for (Eigen::Index c = 0; c < x.channels(); ++c)
            out.channel(r, c) = params.w_trend * trend.channel(r, c) + params.b_trend +
                                params.w_resid * resid.channel(r, c) + params.b_resid;
    return out;
}

double mse_loss(const SeriesTensor& pred, const SeriesTensor& target) {
    check_same_shape(pred, target, "mse_loss");
    return (pred.flat() - target.flat()).squaredNorm() /
           static_cast<double>(pred.flat().size());
}

double mae_loss(const SeriesTensor& pred, const SeriesTensor& target) {
    check_same_shape(pred, target, "mae_loss");
    return (pred.flat() - target.flat()).cwiseAbs().sum() /
           static_cast<double>(pred.flat().size());
}

DLinearGrads dlinear_backward(const DLinearParams& params, const SeriesTensor& x,
                              const SeriesTensor& target) {
    const Eigen::Index h = params.w_trend.rows();
    if (target.time() != h || target.rows() != x.rows() || target.channels() != x.channels())
        throw std::invalid_argument("dlinear_backward: target shape mismatch");
    auto [trend, resid] = series_decompose(x, params.kernel);

    DLinearGrads g;
    g.w_trend = Eigen::MatrixXd::Zero(h, x.time());
    g.w_resid = Eigen::MatrixXd::Zero(h, x.time());
    g.b_trend = Eigen::VectorXd::Zero(h);
    g.b_resid = Eigen::VectorXd::Zero(h);

    const double scale = 2.0 / static_cast<double>(x.rows() * h * x.channels());
    for (Eigen::Index r = 0; r < x.rows(); ++r)
        for (Eigen::Index c = 0; c < x.channels(); ++c) {
            const Eigen::VectorXd tr = trend.channel(r, c);
            const Eigen::VectorXd re = resid.channel(r, c);
            const Eigen::VectorXd pred = params.w_trend * tr + params.b_trend +
                                         params.w_resid * re + params.b_resid;
            const Eigen::VectorXd gp = scale * (pred - target.channel(r, c));
            g.w_trend.noalias() += gp * tr.transpose();
            g.w_resid.noalias() += gp * re.transpose();
            g.b_trend += gp;
            g.b_resid += gp;
        }
    return g;
}

AdamState AdamState::zeros_like(const DLinearParams& p) {
    AdamState s;
    s.m_wt = Eigen::MatrixXd::Zero(p.w_trend.rows(), p.w_trend.cols());
    s.v_wt = s.m_wt;
    s.m_wr = s.m_wt;
    s.v_wr = s.m_wt;
    s.m_bt = Eigen::VectorXd::Zero(p.b_trend.size());
    s.v_bt = s.m_bt;
    s.m_br = s.m_bt;
    s.v_br = s.m_bt;
    return s;
}

namespace {

template <typename P, typename G, typename M>
void adam_update(P& param, const G& grad, M& m, M& v, double lr, long step) {
    m = kBeta1 * m + (1.0 - kBeta1) * grad;
    v = kBeta2 * v.array().matrix() + (1.0 - kBeta2) * grad.array().square().matrix();
    const double bc1 = 1.0 - std::pow(kBeta1, static_cast<double>(step));
    const double bc2 = 1.0 - std::pow(kBeta2, static_cast<double>(step));
    param.array() -= lr * (m.array() / bc1) / ((v.array() / bc2).sqrt() + kEps);
}

}  // namespace

void adam_step(DLinearParams& params, const DLinearGrads& grads, AdamState& state, double lr) {
    ++state.step;
    adam_update(params.w_trend, grads.w_trend, state.m_wt, state.v_wt, lr, state.step);
    adam_update(params.w_resid, grads.w_resid, state.m_wr, state.v_wr, lr, state.step);
    adam_update(params.b_trend, grads.b_trend, state.m_bt, state.v_bt, lr, state.step);
    adam_update(params.b_resid, grads.b_resid, state.m_br, state.v_br, lr, state.step);
}

TrainResult train(const SeriesTensor& train_x, const SeriesTensor& train_y,
                  const SeriesTensor& val_x, const SeriesTensor& val_y, const TrainConfig& cfg) {
    if (train_x.rows() == 0 || val_x.rows() == 0)
        throw std::invalid_argument("train: empty split");
    if (cfg.patience > cfg.epochs)
        throw std::invalid_argument("train: patience exceeds epoch budget");

    Rng rng(cfg.seed);
    DLinearParams params = DLinearParams::zeros(train_x.time(), train_y.time(), cfg.kernel);
    AdamState state = AdamState::zeros_like(params);

    TrainResult result;
    double best_val = std::numeric_limits<double>::infinity();
    int since_best = 0;

    std::vector<std::size_t> order(static_cast<std::size_t>(train_x.rows()));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

    for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
        const double lr =
            cfg.learning_rate * std::pow(cfg.lr_decay, static_cast<double>(epoch - 1));
        rng.shuffle(order);

        double epoch_loss = 0.0;
        long n_batches = 0;
        for (std::size_t off = 0; off < order.size(); off += static_cast<std::size_t>(cfg.batch_size)) {
            const std::size_t end = std::min(order.size(), off + static_cast<std::size_t>(cfg.batch_size));
            std::vector<Eigen::Index> idx(order.begin() + static_cast<long>(off),
                                          order.begin() + static_cast<long>(end));
            SeriesTensor xb = train_x.select_rows(idx);
            SeriesTensor yb = train_y.select_rows(idx);
            auto [xa, ya] = augment_training_batch(xb, yb, cfg.policy, rng);
            const DLinearGrads g = dlinear_backward(params, xa, ya);
            epoch_loss += mse_loss(dlinear_forward(params, xa), ya);
            adam_step(params, g, state, lr);
            ++n_batches;
        }
        result.train_loss.push_back(epoch_loss / static_cast<double>(n_batches));

        const double val = mse_loss(dlinear_forward(params, val_x), val_y);
        result.val_loss.push_back(val);
        if (val < best_val) {
            best_val = val;
            result.best_params = params;
            result.best_epoch = epoch;
            since_best = 0;
        } else if (++since_best >= cfg.patience) {
            break;
        }
    }
    return result;
}

std::pair<double, double> evaluate(const DLinearParams& params, const SeriesTensor& test_x,
                                   const SeriesTensor& test_y) {
    if (test_x.rows() == 0) throw std::invalid_argument("evaluate: empty test set");
    const SeriesTensor pred = dlinear_forward(params, test_x);
    return {mse_loss(pred, test_y), mae_loss(pred, test_y)};
}

void save_params(const DLinearParams& params, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write checkpoint '" + path + "'");
    const Eigen::Index h = params.w_trend.rows(), t = params.w_trend.cols();
    out << "waveaug-dlinear 1\n" << h << " " << t << " " << params.kernel << "\n";
    char buf[32];
    auto emit = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g\n", v);
        out << buf;
    };
    for (Eigen::Index i = 0; i < h; ++i)
        for (Eigen::Index j = 0; j < t; ++j) emit(params.w_trend(i, j));
    for (Eigen::Index i = 0; i < h; ++i) emit(params.b_trend[i]);
    for (Eigen::Index i = 0; i < h; ++i)
        for (Eigen::Index j = 0; j < t; ++j) emit(params.w_resid(i, j));
    for (Eigen::Index i = 0; i < h; ++i) emit(params.b_resid[i]);
}

DLinearParams load_params(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read checkpoint '" + path + "'");
    std::string magic;
    int version = 0;
    in >> magic >> version;
    if (magic != "waveaug-dlinear" || version != 1)
        throw std::runtime_error("unrecognized checkpoint format in '" + path + "'");
    Eigen::Index h = 0, t = 0;
    int kernel = 0;
    in >> h >> t >> kernel;
    DLinearParams p = DLinearParams::zeros(t, h, kernel);
    for (Eigen::Index i = 0; i < h; ++i)
        for (Eigen::Index j = 0; j < t; ++j) in >> p.w_trend(i, j);
    for (Eigen::Index i = 0; i < h; ++i) in >> p.b_trend[i];
    for (Eigen::Index i = 0; i < h; ++i)
        for (Eigen::Index j = 0; j < t; ++j) in >> p.w_resid(i, j);
    for (Eigen::Index i = 0; i < h; ++i) in >> p.b_resid[i];
    if (!in) throw std::runtime_error("truncated checkpoint '" + path + "'");
    return p;
}

}  // namespace waveaug

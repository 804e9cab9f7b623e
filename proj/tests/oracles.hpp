#pragma once

// Test-only reference implementations, kept independent of the library's
// transform code paths.

#include <Eigen/Dense>
#include <complex>
#include <numbers>

#include "waveaug/model.hpp"
#include "waveaug/rng.hpp"

namespace oracles {

/// Direct O(n^2) DFT of a real sequence, one-sided bins.
inline Eigen::VectorXcd direct_dft(const Eigen::VectorXd& x) {
    const Eigen::Index n = x.size();
    Eigen::VectorXcd bins(n / 2 + 1);
    for (Eigen::Index k = 0; k <= n / 2; ++k) {
        std::complex<double> acc(0.0, 0.0);
        for (Eigen::Index t = 0; t < n; ++t) {
            const double ang = -2.0 * std::numbers::pi * static_cast<double>(k) *
                               static_cast<double>(t) / static_cast<double>(n);
            acc += x[t] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        bins[k] = acc;
    }
    return bins;
}

/// Central finite differences of the MSE training loss w.r.t. one parameter
/// entry, used to cross-check analytic gradients.
template <typename Accessor>
double fd_gradient(waveaug::DLinearParams params, const waveaug::SeriesTensor& x,
                   const waveaug::SeriesTensor& y, Accessor access, double eps = 1e-5) {
    double& slot = access(params);
    const double saved = slot;
    slot = saved + eps;
    const double up = waveaug::mse_loss(waveaug::dlinear_forward(params, x), y);
    slot = saved - eps;
    const double dn = waveaug::mse_loss(waveaug::dlinear_forward(params, x), y);
    return (up - dn) / (2.0 * eps);
}

inline Eigen::VectorXd random_vector(waveaug::Rng& rng, Eigen::Index n, double lo = -10.0,
                                     double hi = 10.0) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = lo + (hi - lo) * rng.uniform();
    return v;
}

inline Eigen::MatrixXd random_matrix(waveaug::Rng& rng, Eigen::Index r, Eigen::Index c,
                                     double lo = -10.0, double hi = 10.0) {
    Eigen::MatrixXd m(r, c);
    for (Eigen::Index j = 0; j < c; ++j)
        for (Eigen::Index i = 0; i < r; ++i) m(i, j) = lo + (hi - lo) * rng.uniform();
    return m;
}

inline waveaug::SeriesTensor random_tensor(waveaug::Rng& rng, Eigen::Index rows,
                                           Eigen::Index time, Eigen::Index channels,
                                           double lo = -10.0, double hi = 10.0) {
    waveaug::SeriesTensor t(rows, time, channels);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < channels; ++c)
            for (Eigen::Index k = 0; k < time; ++k) t(r, k, c) = lo + (hi - lo) * rng.uniform();
    return t;
}

/// FNV-1a over the raw bytes of a tensor, for exact-equality comparisons.
inline std::uint64_t hash_tensor(const waveaug::SeriesTensor& t) {
    std::uint64_t h = 1469598103934665603ULL;
    const auto& flat = t.flat();
    const auto* bytes = reinterpret_cast<const unsigned char*>(flat.data());
    for (Eigen::Index i = 0; i < flat.size() * static_cast<Eigen::Index>(sizeof(double)); ++i) {
        h ^= bytes[i];
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace oracles

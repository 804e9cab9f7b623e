#include "waveaug/wavelet.hpp"

#include <charconv>
#include <stdexcept>

namespace waveaug {

namespace {

// Symmetric half-point extension: ... x1 x0 | x0 x1 ... x(n-1) | x(n-1) ...
// Valid for any integer index (reflects repeatedly).
inline Eigen::Index sym_index(Eigen::Index i, Eigen::Index n) {
    const Eigen::Index p = 2 * n;
    Eigen::Index m = i % p;
    if (m < 0) m += p;
    return m < n ? m : p - 1 - m;
}

Eigen::VectorXd analysis_pass(const Eigen::VectorXd& x, const Eigen::VectorXd& filt) {
    const Eigen::Index n = x.size(), f = filt.size();
    const Eigen::Index out_len = (n + f - 1) / 2;
    Eigen::VectorXd y(out_len);
    for (Eigen::Index i = 0; i < out_len; ++i) {
        double acc = 0.0;
        for (Eigen::Index k = 0; k < f; ++k)
            acc += filt[k] * x[sym_index(2 * i + 1 - k, n)];
        y[i] = acc;
    }
    return y;
}

// Expected coefficient lengths for original_len, deepest level last.
std::vector<Eigen::Index> length_chain(Eigen::Index original_len, Eigen::Index f, int level) {
    std::vector<Eigen::Index> chain;
    Eigen::Index n = original_len;
    for (int i = 0; i < level; ++i) {
        n = (n + f - 1) / 2;
        chain.push_back(n);
    }
    return chain;
}

}  // namespace

FilterBank filter_bank(const std::string& name) {
    int n = 0;
    bool ok = name.size() > 2 && name.compare(0, 2, "db") == 0;
    if (ok) {
        auto res = std::from_chars(name.data() + 2, name.data() + name.size(), n);
        ok = res.ec == std::errc{} && res.ptr == name.data() + name.size();
    }
    const double* dec_lo = ok ? detail::daubechies_dec_lo(n) : nullptr;
    if (!dec_lo)
        throw std::invalid_argument("unknown wavelet '" + name + "' (supported: db1..db26)");

    const Eigen::Index f = 2 * n;
    FilterBank fb;
    fb.name = name;
    fb.dec_lo = Eigen::Map<const Eigen::VectorXd>(dec_lo, f);
    fb.dec_hi.resize(f);
    for (Eigen::Index k = 0; k < f; ++k)
        fb.dec_hi[k] = (k % 2 == 0 ? 1.0 : -1.0) * fb.dec_lo[f - 1 - k];
    fb.rec_lo = fb.dec_lo.reverse();
    fb.rec_hi = fb.dec_hi.reverse();
    return fb;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> dwt_step(const Eigen::VectorXd& signal,
                                                     const FilterBank& fb) {
    if (signal.size() < 2)
        throw std::invalid_argument("dwt_step: signal must have at least 2 samples");
    return {analysis_pass(signal, fb.dec_lo), analysis_pass(signal, fb.dec_hi)};
}

Eigen::VectorXd idwt_step(const Eigen::VectorXd& approx, const Eigen::VectorXd& detail,
                          const FilterBank& fb, Eigen::Index out_len) {
    const Eigen::Index len = approx.size(), f = fb.length();
    if (detail.size() != len)
        throw std::invalid_argument("idwt_step: approx/detail length mismatch");
    if (out_len < 1 || (out_len + f - 1) / 2 != len)
        throw std::invalid_argument("idwt_step: out_len inconsistent with coefficient length");

    Eigen::VectorXd out = Eigen::VectorXd::Zero(out_len);
    for (Eigen::Index t = 0; t < out_len; ++t) {
        // Coefficient i contributes through upsampled position m = 2i + 1
        // with filter tap k = t + f - 1 - m in [0, f).
        double acc = 0.0;
        const Eigen::Index i_lo = t / 2;
        const Eigen::Index i_hi = std::min<Eigen::Index>(len - 1, (t + f - 2) / 2);
        for (Eigen::Index i = i_lo; i <= i_hi; ++i) {
            const Eigen::Index k = t + f - 2 - 2 * i;
            acc += fb.rec_lo[k] * approx[i] + fb.rec_hi[k] * detail[i];
        }
        out[t] = acc;
    }
    return out;
}

int max_level(Eigen::Index signal_len, Eigen::Index filter_len) {
    if (signal_len < 2 || filter_len < 2)
        throw std::invalid_argument("max_level: arguments must be >= 2");
    int level = 0;
    while (signal_len >= (filter_len - 1) << (level + 1)) ++level;
    return level;
}

WaveletCoeffs wavedec(const Eigen::VectorXd& signal, const FilterBank& fb, int level) {
    if (level < 1) throw std::invalid_argument("wavedec: level must be >= 1");
    const int lmax = max_level(signal.size(), fb.length());
    if (level > lmax)
        throw std::invalid_argument("wavedec: level " + std::to_string(level) +
                                    " exceeds max level " + std::to_string(lmax) +
                                    " for length " + std::to_string(signal.size()));
    WaveletCoeffs wc;
    wc.original_len = signal.size();
    wc.details.resize(static_cast<size_t>(level));
    Eigen::VectorXd a = signal;
    for (int i = 0; i < level; ++i) {
        auto [next_a, d] = dwt_step(a, fb);
        wc.details[static_cast<size_t>(level - 1 - i)] = std::move(d);  // coarsest first
        a = std::move(next_a);
    }
    wc.approx = std::move(a);
    return wc;
}

Eigen::VectorXd waverec(const WaveletCoeffs& coeffs, const FilterBank& fb) {
    const int level = static_cast<int>(coeffs.level());
    if (level < 1) throw std::invalid_argument("waverec: empty coefficient pyramid");
    const auto chain = length_chain(coeffs.original_len, fb.length(), level);
    if (coeffs.approx.size() != chain.back())
        throw std::invalid_argument("waverec: approximation length breaks the chain");
    for (int i = 0; i < level; ++i) {
        // details[0] is the deepest (coarsest) band, so it pairs with chain.back().
        if (coeffs.details[static_cast<size_t>(i)].size() !=
            chain[static_cast<size_t>(level - 1 - i)])
            throw std::invalid_argument("waverec: detail length breaks the chain");
    }
    Eigen::VectorXd a = coeffs.approx;
    for (int i = 0; i < level; ++i) {
        const Eigen::Index out_len =
            (i == level - 1) ? coeffs.original_len : chain[static_cast<size_t>(level - 2 - i)];
        a = idwt_step(a, coeffs.details[static_cast<size_t>(i)], fb, out_len);
    }
    return a;
}

}  // namespace waveaug

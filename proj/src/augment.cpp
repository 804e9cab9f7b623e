#include "waveaug/augment.hpp"

#include <cmath>
#include <stdexcept>

#include "waveaug/spectral.hpp"

namespace waveaug {

AugMethod aug_method_from_string(const std::string& s) {
    if (s == "none") return AugMethod::none;
    if (s == "wave_mask") return AugMethod::wave_mask;
    if (s == "wave_mix") return AugMethod::wave_mix;
    if (s == "freq_mask") return AugMethod::freq_mask;
    if (s == "freq_mix") return AugMethod::freq_mix;
    throw std::invalid_argument("unknown augmentation method '" + s + "'");
}

std::string to_string(AugMethod m) {
    switch (m) {
        case AugMethod::none: return "none";
        case AugMethod::wave_mask: return "wave_mask";
        case AugMethod::wave_mix: return "wave_mix";
        case AugMethod::freq_mask: return "freq_mask";
        case AugMethod::freq_mix: return "freq_mix";
    }
    return "?";
}

void AugmentationPolicy::validate() const {
    auto in01 = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!in01(sampling_rate))
        throw std::invalid_argument("sampling_rate must be in [0, 1]");
    if (method == AugMethod::wave_mask || method == AugMethod::wave_mix) {
        if (level < 1) throw std::invalid_argument("level must be >= 1");
        if (rates.size() != static_cast<size_t>(level) + 1)
            throw std::invalid_argument("rates must have length level + 1 (got " +
                                        std::to_string(rates.size()) + " for level " +
                                        std::to_string(level) + ")");
        for (double r : rates)
            if (!in01(r)) throw std::invalid_argument("mask rates must be in [0, 1]");
        filter_bank(wavelet);  // rejects unknown identifiers
    }
    if (method == AugMethod::freq_mask || method == AugMethod::freq_mix) {
        if (!in01(rate)) throw std::invalid_argument("rate must be in [0, 1]");
    }
}

MaskVector create_random_mask(Eigen::Index len, double rate, Rng& rng) {
    if (len < 1) throw std::invalid_argument("create_random_mask: len must be >= 1");
    if (rate < 0.0 || rate > 1.0)
        throw std::invalid_argument("create_random_mask: rate must be in [0, 1]");
    MaskVector m(static_cast<size_t>(len));
    for (Eigen::Index i = 0; i < len; ++i) m[static_cast<size_t>(i)] = rng.bernoulli(rate);
    return m;
}

Eigen::VectorXd wave_mask_channel(const Eigen::VectorXd& s, const AugmentationPolicy& policy,
                                  Rng& rng) {
    policy.validate();
    const FilterBank fb = filter_bank(policy.wavelet);
    WaveletCoeffs wc = wavedec(s, fb, policy.level);
    for (Eigen::Index i = 0; i <= wc.level(); ++i) {
        Eigen::VectorXd& band = wc.band(i);
        const MaskVector m =
            create_random_mask(band.size(), policy.rates[static_cast<size_t>(i)], rng);
        for (Eigen::Index k = 0; k < band.size(); ++k)
            if (m[static_cast<size_t>(k)]) band[k] = 0.0;
    }
    return waverec(wc, fb);
}

Eigen::VectorXd wave_mix_channel(const Eigen::VectorXd& s1, const Eigen::VectorXd& s2,
                                 const AugmentationPolicy& policy, Rng& rng) {
    policy.validate();
    if (s1.size() != s2.size())
        throw std::invalid_argument("wave_mix: input length mismatch");
    const FilterBank fb = filter_bank(policy.wavelet);
    WaveletCoeffs w1 = wavedec(s1, fb, policy.level);
    const WaveletCoeffs w2 = wavedec(s2, fb, policy.level);
    for (Eigen::Index i = 0; i <= w1.level(); ++i) {
        Eigen::VectorXd& band = w1.band(i);
        const Eigen::VectorXd& other = w2.band(i);
        // m1 True means the coefficient comes from the partner (complementary
        // mask on the second signal).
        const MaskVector m1 =
            create_random_mask(band.size(), policy.rates[static_cast<size_t>(i)], rng);
        for (Eigen::Index k = 0; k < band.size(); ++k)
            if (m1[static_cast<size_t>(k)]) band[k] = other[k];
    }
    return waverec(w1, fb);
}

Eigen::VectorXd freq_mask_channel(const Eigen::VectorXd& s, double rate, Rng& rng) {
    if (rate < 0.0 || rate > 1.0)
        throw std::invalid_argument("freq_mask: rate must be in [0, 1]");
    Spectrum spec = rfft(s);
    const MaskVector m = create_random_mask(spec.bins.size(), rate, rng);
    for (Eigen::Index k = 0; k < spec.bins.size(); ++k)
        if (m[static_cast<size_t>(k)]) spec.bins[k] = 0.0;
    return irfft(spec);
}

Eigen::VectorXd freq_mix_channel(const Eigen::VectorXd& s1, const Eigen::VectorXd& s2,
                                 double rate, Rng& rng) {
    if (rate < 0.0 || rate > 1.0)
        throw std::invalid_argument("freq_mix: rate must be in [0, 1]");
    if (s1.size() != s2.size())
        throw std::invalid_argument("freq_mix: input length mismatch");
    Spectrum spec = rfft(s1);
    const Spectrum spec2 = rfft(s2);
    const MaskVector m = create_random_mask(spec.bins.size(), rate, rng);
    for (Eigen::Index k = 0; k < spec.bins.size(); ++k)
        if (m[static_cast<size_t>(k)]) spec.bins[k] = spec2.bins[k];
    return irfft(spec);
}

namespace {

// Applies a single-channel transform per column, each with an independent
// substream keyed by (salt, channel). The salt is one draw from rng, so
// repeated calls produce fresh masks.
template <typename Fn>
Eigen::MatrixXd per_channel(const Eigen::MatrixXd& s, Rng& rng, Fn&& fn) {
    const std::uint64_t salt = rng.next_u64();
    Eigen::MatrixXd out(s.rows(), s.cols());
    for (Eigen::Index c = 0; c < s.cols(); ++c) {
        Rng ch = rng.child(salt, static_cast<std::uint64_t>(c));
        out.col(c) = fn(c, ch);
    }
    return out;
}

}  // namespace

Eigen::MatrixXd wave_mask(const Eigen::MatrixXd& s, const AugmentationPolicy& policy, Rng& rng) {
    return per_channel(s, rng, [&](Eigen::Index c, Rng& ch) {
        return wave_mask_channel(s.col(c), policy, ch);
    });
}

Eigen::MatrixXd wave_mix(const Eigen::MatrixXd& s1, const Eigen::MatrixXd& s2,
                         const AugmentationPolicy& policy, Rng& rng) {
    if (s1.rows() != s2.rows() || s1.cols() != s2.cols())
        throw std::invalid_argument("wave_mix: shape mismatch");
    return per_channel(s1, rng, [&](Eigen::Index c, Rng& ch) {
        return wave_mix_channel(s1.col(c), s2.col(c), policy, ch);
    });
}

Eigen::MatrixXd freq_mask(const Eigen::MatrixXd& s, double rate, Rng& rng) {
    return per_channel(s, rng, [&](Eigen::Index c, Rng& ch) {
        return freq_mask_channel(s.col(c), rate, ch);
    });
}

Eigen::MatrixXd freq_mix(const Eigen::MatrixXd& s1, const Eigen::MatrixXd& s2, double rate,
                         Rng& rng) {
    if (s1.rows() != s2.rows() || s1.cols() != s2.cols())
        throw std::invalid_argument("freq_mix: shape mismatch");
    return per_channel(s1, rng, [&](Eigen::Index c, Rng& ch) {
        return freq_mix_channel(s1.col(c), s2.col(c), rate, ch);
    });
}

SeriesTensor sample_rows(const SeriesTensor& aug, double sampling_rate, Rng& rng) {
    if (sampling_rate < 0.0 || sampling_rate > 1.0)
        throw std::invalid_argument("sample_rows: sampling_rate must be in [0, 1]");
    const Eigen::Index b = aug.rows();
    Eigen::Index n = 0;
    if (sampling_rate > 0.0) {
        n = static_cast<Eigen::Index>(
            std::llround(sampling_rate * static_cast<double>(b)));
        n = std::max<Eigen::Index>(1, std::min(n, b));
    }
    const auto perm = rng.permutation(static_cast<std::size_t>(b));
    std::vector<Eigen::Index> idx(static_cast<size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i)
        idx[static_cast<size_t>(i)] = static_cast<Eigen::Index>(perm[static_cast<size_t>(i)]);
    return aug.select_rows(idx);
}

std::pair<SeriesTensor, SeriesTensor> augment_training_batch(const SeriesTensor& x,
                                                             const SeriesTensor& y,
                                                             const AugmentationPolicy& policy,
                                                             Rng& rng) {
    if (x.rows() != y.rows() || x.channels() != y.channels())
        throw std::invalid_argument("augment_training_batch: x/y shape mismatch");
    if (policy.method == AugMethod::none) return {x, y};
    policy.validate();

    const SeriesTensor s = SeriesTensor::concat_time(x, y);
    const Eigen::Index b = s.rows();

    std::vector<std::size_t> partner;
    const bool mixing =
        policy.method == AugMethod::wave_mix || policy.method == AugMethod::freq_mix;
    if (mixing) partner = rng.permutation(static_cast<std::size_t>(b));

    const std::uint64_t salt = rng.next_u64();
    SeriesTensor aug(b, s.time(), s.channels());
    for (Eigen::Index r = 0; r < b; ++r) {
        Rng row_rng = rng.child(salt, static_cast<std::uint64_t>(r));
        const Eigen::MatrixXd win = s.row(r);
        Eigen::MatrixXd out;
        switch (policy.method) {
            case AugMethod::wave_mask:
                out = wave_mask(win, policy, row_rng);
                break;
            case AugMethod::wave_mix:
                out = wave_mix(win, s.row(static_cast<Eigen::Index>(partner[static_cast<size_t>(r)])),
                               policy, row_rng);
                break;
            case AugMethod::freq_mask:
                out = freq_mask(win, policy.rate, row_rng);
                break;
            case AugMethod::freq_mix:
                out = freq_mix(win, s.row(static_cast<Eigen::Index>(partner[static_cast<size_t>(r)])),
                               policy.rate, row_rng);
                break;
            case AugMethod::none:
                out = win;
                break;
        }
        aug.row(r) = out;
    }

    const SeriesTensor sampled = sample_rows(aug, policy.sampling_rate, rng);
    auto [ax, ay] = sampled.split_time(x.time());
    return {SeriesTensor::concat_rows(x, ax), SeriesTensor::concat_rows(y, ay)};
}

}  // namespace waveaug

#pragma once

#include <string>
#include <vector>

#include "waveaug/rng.hpp"
#include "waveaug/series.hpp"
#include "waveaug/wavelet.hpp"

namespace waveaug {

enum class AugMethod { none, wave_mask, wave_mix, freq_mask, freq_mix };

AugMethod aug_method_from_string(const std::string& s);
std::string to_string(AugMethod m);

/// Method selector plus its rates. Wave methods use `rates` (length level+1,
/// approximation rate first, then coarsest-to-finest details); freq methods
/// use the scalar `rate`.
struct AugmentationPolicy {
    AugMethod method = AugMethod::none;
    std::string wavelet = "db1";
    int level = 1;
    std::vector<double> rates;     // wave methods
    double rate = 0.0;             // freq methods
    double sampling_rate = 0.5;

    /// Throws std::invalid_argument on rate-range or rates-length violations.
    void validate() const;
};

using MaskVector = std::vector<bool>;

/// Independent Bernoulli(rate) per bit; True = masked. Consumes exactly `len`
/// draws from rng.
MaskVector create_random_mask(Eigen::Index len, double rate, Rng& rng);

// Window-level augmentations. A window is a (time x channels) matrix holding
// the concatenated look-back and horizon; each channel is processed with its
// own substream derived from rng.

Eigen::MatrixXd wave_mask(const Eigen::MatrixXd& s, const AugmentationPolicy& policy, Rng& rng);
Eigen::MatrixXd wave_mix(const Eigen::MatrixXd& s1, const Eigen::MatrixXd& s2,
                         const AugmentationPolicy& policy, Rng& rng);
Eigen::MatrixXd freq_mask(const Eigen::MatrixXd& s, double rate, Rng& rng);
Eigen::MatrixXd freq_mix(const Eigen::MatrixXd& s1, const Eigen::MatrixXd& s2, double rate,
                         Rng& rng);

// Single-channel forms; the matrix forms above apply these per column with
// per-channel substreams (rng.child(channel)).
Eigen::VectorXd wave_mask_channel(const Eigen::VectorXd& s, const AugmentationPolicy& policy,
                                  Rng& rng);
Eigen::VectorXd wave_mix_channel(const Eigen::VectorXd& s1, const Eigen::VectorXd& s2,
                                 const AugmentationPolicy& policy, Rng& rng);
Eigen::VectorXd freq_mask_channel(const Eigen::VectorXd& s, double rate, Rng& rng);
Eigen::VectorXd freq_mix_channel(const Eigen::VectorXd& s1, const Eigen::VectorXd& s2,
                                 double rate, Rng& rng);

/// Uniform without-replacement row subsample; n = max(1, round(rate * b)) for
/// rate > 0, else 0 rows. Row order is shuffled.
SeriesTensor sample_rows(const SeriesTensor& aug, double sampling_rate, Rng& rng);

/// Full training-batch pipeline: concatenate look-back and horizon per row,
/// augment (mix methods pair row i with row perm(i) of a fresh random
/// permutation), subsample, re-split, and append the synthetic rows after the
/// originals.
std::pair<SeriesTensor, SeriesTensor> augment_training_batch(const SeriesTensor& x,
                                                             const SeriesTensor& y,
                                                             const AugmentationPolicy& policy,
                                                             Rng& rng);

}  // namespace waveaug

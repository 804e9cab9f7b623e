#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace waveaug {

namespace detail {
/// dec_lo coefficients for dbN, length 2n; nullptr if n is out of range.
const double* daubechies_dec_lo(int n);
}  // namespace detail

/// The four FIRs of an orthogonal wavelet. dec_hi is the quadrature mirror of
/// dec_lo (alternating-sign reversal); rec filters are time-reversed dec
/// filters.
struct FilterBank {
    std::string name;
    Eigen::VectorXd dec_lo, dec_hi, rec_lo, rec_hi;

    Eigen::Index length() const { return dec_lo.size(); }
};

/// Looks up a Daubechies filter bank by identifier ("db1".."db26").
FilterBank filter_bank(const std::string& name);

/// Multilevel decomposition output for one channel. details are ordered
/// coarsest first, so index i of {approx, details...} matches level i+1 of an
/// (L+1)-entry coefficient pyramid with the approximation at slot 1.
struct WaveletCoeffs {
    Eigen::VectorXd approx;
    std::vector<Eigen::VectorXd> details;  // coarsest first
    Eigen::Index original_len = 0;

    Eigen::Index level() const { return static_cast<Eigen::Index>(details.size()); }

    /// Uniform accessor: band(0) = approx, band(1) = coarsest detail, ...
    Eigen::VectorXd& band(Eigen::Index i) {
        return i == 0 ? approx : details[static_cast<size_t>(i - 1)];
    }
    const Eigen::VectorXd& band(Eigen::Index i) const {
        return i == 0 ? approx : details[static_cast<size_t>(i - 1)];
    }
};

/// One analysis stage: symmetric half-point padding, convolution with the
/// decomposition filters, downsampling by 2. Both outputs have length
/// floor((n + f - 1) / 2).
std::pair<Eigen::VectorXd, Eigen::VectorXd> dwt_step(const Eigen::VectorXd& signal,
                                                     const FilterBank& fb);

/// One synthesis stage: upsample by 2, filter with the reconstruction pair,
/// sum, trim the padding down to out_len samples. Exact inverse of dwt_step.
Eigen::VectorXd idwt_step(const Eigen::VectorXd& approx, const Eigen::VectorXd& detail,
                          const FilterBank& fb, Eigen::Index out_len);

/// Deepest admissible decomposition level for a signal/filter pair:
/// floor(log2(signal_len / (filter_len - 1))), clamped at 0.
int max_level(Eigen::Index signal_len, Eigen::Index filter_len);

/// Multilevel analysis: dwt_step applied `level` times, recursing on the
/// approximation.
WaveletCoeffs wavedec(const Eigen::VectorXd& signal, const FilterBank& fb, int level);

/// Multilevel synthesis; inverse of wavedec on an unmodified pyramid.
Eigen::VectorXd waverec(const WaveletCoeffs& coeffs, const FilterBank& fb);

}  // namespace waveaug

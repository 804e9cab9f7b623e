#pragma once

#include <Eigen/Dense>
#include <complex>

namespace waveaug {

/// One-sided spectrum of a real sequence: floor(n/2)+1 bins, unnormalized.
struct Spectrum {
    Eigen::VectorXcd bins;
    Eigen::Index original_len = 0;
};

/// Forward DFT of a real sequence (unnormalized, one-sided). Power-of-two
/// lengths use radix-2; everything else goes through Bluestein's chirp-z, so
/// any length is O(n log n).
Spectrum rfft(const Eigen::VectorXd& signal);

/// Inverse of rfft (divides by n). The dropped bins are implied by conjugate
/// symmetry.
Eigen::VectorXd irfft(const Spectrum& spec);

}  // namespace waveaug

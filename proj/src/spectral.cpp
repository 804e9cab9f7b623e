#include "waveaug/spectral.hpp"

#include <numbers>
#include <stdexcept>
#include <vector>

namespace waveaug {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

bool is_pow2(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 Cooley-Tukey. n must be a power of two.
void fft_pow2(std::vector<cd>& a, bool inverse) {
    const size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * kPi / static_cast<double>(len);
        const cd wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            cd w(1.0);
            for (size_t k = 0; k < len / 2; ++k) {
                cd u = a[i + k];
                cd v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (inverse)
        for (auto& x : a) x /= static_cast<double>(n);
}

// Arbitrary-length DFT via Bluestein's chirp-z transform.
void fft_bluestein(std::vector<cd>& a, bool inverse) {
    const size_t n = a.size();
    size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;

    // chirp[k] = exp(-i pi k^2 / n); k^2 mod 2n avoids precision loss for big k
    std::vector<cd> chirp(n);
    const double sign = inverse ? 1.0 : -1.0;
    for (size_t k = 0; k < n; ++k) {
        const size_t k2 = (k * k) % (2 * n);
        const double ang = sign * kPi * static_cast<double>(k2) / static_cast<double>(n);
        chirp[k] = cd(std::cos(ang), std::sin(ang));
    }

    std::vector<cd> u(m, cd(0)), v(m, cd(0));
    for (size_t k = 0; k < n; ++k) u[k] = a[k] * chirp[k];
    v[0] = std::conj(chirp[0]);
    for (size_t k = 1; k < n; ++k) v[k] = v[m - k] = std::conj(chirp[k]);

    fft_pow2(u, false);
    fft_pow2(v, false);
    for (size_t k = 0; k < m; ++k) u[k] *= v[k];
    fft_pow2(u, true);

    for (size_t k = 0; k < n; ++k) a[k] = u[k] * chirp[k];
    if (inverse)
        for (auto& x : a) x /= static_cast<double>(n);
}

void fft(std::vector<cd>& a, bool inverse) {
    if (a.size() <= 1) return;
    if (is_pow2(a.size()))
        fft_pow2(a, inverse);
    else
        fft_bluestein(a, inverse);
}

}  // namespace

Spectrum rfft(const Eigen::VectorXd& signal) {
    const Eigen::Index n = signal.size();
    if (n < 1) throw std::invalid_argument("rfft: empty input");
    std::vector<cd> a(static_cast<size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) a[static_cast<size_t>(i)] = signal[i];
    fft(a, false);
    Spectrum s;
    s.original_len = n;
    s.bins.resize(n / 2 + 1);
    for (Eigen::Index i = 0; i <= n / 2; ++i) s.bins[i] = a[static_cast<size_t>(i)];
    return s;
}

Eigen::VectorXd irfft(const Spectrum& spec) {
    const Eigen::Index n = spec.original_len;
    if (n < 1 || spec.bins.size() != n / 2 + 1)
        throw std::invalid_argument("irfft: bin count inconsistent with original_len");
    std::vector<cd> a(static_cast<size_t>(n));
    for (Eigen::Index i = 0; i <= n / 2; ++i) a[static_cast<size_t>(i)] = spec.bins[i];
    for (Eigen::Index i = n / 2 + 1; i < n; ++i)
        a[static_cast<size_t>(i)] = std::conj(spec.bins[n - i]);
    fft(a, true);
    Eigen::VectorXd out(n);
    for (Eigen::Index i = 0; i < n; ++i) out[i] = a[static_cast<size_t>(i)].real();
    return out;
}

}  // namespace waveaug

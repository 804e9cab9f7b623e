#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace waveaug {

/// Deterministic random stream. Wraps mt19937_64 but generates doubles and
/// bounded integers itself so sequences are identical across standard library
/// implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(mix(seed)), base_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    /// Uniform integer in [0, n). Rejection sampling, no modulo bias.
    std::uint64_t uniform_int(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[uniform_int(i)]);
    }

    /// Random permutation of 0..n-1.
    std::vector<std::size_t> permutation(std::size_t n) {
        std::vector<std::size_t> p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = i;
        shuffle(p);
        return p;
    }

    /// Independent substream keyed by (a, b); identical keys give identical
    /// streams regardless of how much the parent has been consumed.
    Rng child(std::uint64_t a, std::uint64_t b = 0) const {
        return Rng(mix(base_) ^ mix(a + 0x9e3779b97f4a7c15ULL) ^
                   mix(b + 0x3c6ef372fe94f82aULL));
    }

    std::uint64_t base_seed() const { return base_; }

private:
    static std::uint64_t mix(std::uint64_t x) {
        // splitmix64 finalizer
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 engine_;
    std::uint64_t base_;
};

}  // namespace waveaug

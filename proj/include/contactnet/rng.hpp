#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace contactnet {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// mt19937_64 core with explicit output transforms. The standard distribution
// adaptors are implementation-defined, so all draws go through the methods
// below to keep seeded runs bit-reproducible.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Independent substream: used for per-run / per-network seeding so
    // parallel schedules cannot change results.
    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x51ed2701)));
    }

    std::uint64_t bits() { return engine_(); }

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    // Unbiased integer in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit =
            std::numeric_limits<std::uint64_t>::max() -
            std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    // Inverse-CDF Weibull draw, strictly positive.
    double weibull(double shape, double scale) {
        double u;
        do {
            u = uniform();
        } while (u <= 0.0);
        return scale * std::pow(-std::log(u), 1.0 / shape);
    }

    // Index draw from an unnormalized-free probability vector (sums to 1).
    template <typename Probs>
    int categorical(const Probs& probs, int k) {
        const double u = uniform();
        double cumulative = 0.0;
        for (int i = 0; i + 1 < k; ++i) {
            cumulative += probs[i];
            if (u < cumulative) {
                return i;
            }
        }
        return k - 1;
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace contactnet

// Deterministic PRNG for sampling; fixed across platforms and runs.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace hs {

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0, 1)
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    // uniform in [-1, 1)
    double next_signed() { return 2.0 * next_double() - 1.0; }
};

// `count` points with every coordinate modulus <= radius (sup-norm ball)
inline std::vector<std::vector<std::complex<double>>> sample_points(int k, int count, double radius,
                                                                    std::uint64_t seed) {
    SplitMix64 rng(seed);
    const double s = radius / 1.4142135623730951;
    std::vector<std::vector<std::complex<double>>> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        std::vector<std::complex<double>> z(static_cast<std::size_t>(k));
        for (auto& c : z) c = {s * rng.next_signed(), s * rng.next_signed()};
        pts.push_back(std::move(z));
    }
    return pts;
}

}  // namespace hs

#include "tenstruct/sampling.hpp"

#include <cmath>
#include <numbers>

namespace tenstruct {

SplitMix64 trial_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    // Mix the three keys through independent SplitMix64 draws.
    SplitMix64 mixer(seed);
    std::uint64_t state = mixer();
    state ^= SplitMix64(state ^ (stream * 0xD1B54A32D192ED03ULL))();
    state ^= SplitMix64(state ^ (index * 0xABC98388FB8FAC03ULL + 0x8CB92BA72F3D8DD7ULL))();
    return SplitMix64(state);
}

double uniform01(SplitMix64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(SplitMix64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

double standard_normal(SplitMix64& rng) {
    // Box-Muller; 1 - u keeps the log argument in (0, 1].
    const double u1 = 1.0 - uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<double> unit_sphere_sample(SplitMix64& rng, int n) {
    std::vector<double> x(static_cast<std::size_t>(n));
    double norm2 = 0.0;
    while (norm2 == 0.0) {
        norm2 = 0.0;
        for (auto& xi : x) {
            xi = standard_normal(rng);
            norm2 += xi * xi;
        }
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& xi : x) xi *= inv;
    return x;
}

std::vector<double> simplex_sample(SplitMix64& rng, int n) {
    std::vector<double> x(static_cast<std::size_t>(n));
    double total = 0.0;
    for (auto& xi : x) {
        xi = -std::log(1.0 - uniform01(rng));
        total += xi;
    }
    if (total == 0.0) {
        x.assign(x.size(), 1.0 / n);
        return x;
    }
    for (auto& xi : x) xi /= total;
    return x;
}

}  // namespace tenstruct

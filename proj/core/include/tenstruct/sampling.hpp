#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace tenstruct {

/// SplitMix64 bit generator. Small state, so one engine per trial is cheap,
/// which lets every randomized probe derive its stream from (seed, index)
/// and stay order-independent.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// Independent stream for trial `index` of probe family `stream`.
[[nodiscard]] SplitMix64 trial_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits.
[[nodiscard]] double uniform01(SplitMix64& rng);
[[nodiscard]] double uniform(SplitMix64& rng, double lo, double hi);
[[nodiscard]] double standard_normal(SplitMix64& rng);

/// Uniform on the Euclidean unit sphere in R^n.
[[nodiscard]] std::vector<double> unit_sphere_sample(SplitMix64& rng, int n);

/// Uniform on the probability simplex in R^n.
[[nodiscard]] std::vector<double> simplex_sample(SplitMix64& rng, int n);

namespace streams {
inline constexpr std::uint64_t kCopositive = 1;
inline constexpr std::uint64_t kPsdSphere = 2;
inline constexpr std::uint64_t kSshopmStart = 3;
inline constexpr std::uint64_t kMonotonePair = 4;
}  // namespace streams

}  // namespace tenstruct

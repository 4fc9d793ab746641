#pragma once

#include <cstdint>
#include <random>

namespace qchoice {

// Seeded engine handed to every sampler. One instance per worker; not
// thread-safe.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return uniform_(engine_); }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform_(engine_); }
    double normal() { return normal_(engine_); }

private:
    std::mt19937_64 engine_;
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
    std::normal_distribution<double> normal_{0.0, 1.0};
};

// SplitMix64 finalizer over (seed, stream). Used to derive worker seeds.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace qchoice

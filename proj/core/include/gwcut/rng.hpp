#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace gwcut {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seed of the index-th substream under a run seed.  Consumers that may run in
// parallel (rounding trials, solver columns) each own a substream, so parallel
// schedules reproduce the sequential results exactly.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed + 0x9e3779b97f4a7c15ULL;
    std::uint64_t mixed = splitmix64(s);
    s = mixed ^ (index + 0x2545f4914f6cdd1dULL);
    return splitmix64(s);
}

// Decorrelates seed usage between components that share one run seed
// (solver initialization vs. rounding trials vs. pipeline iterations).
inline std::uint64_t domain_seed(std::uint64_t seed, std::uint64_t domain) {
    std::uint64_t s = seed ^ (domain * 0x517cc1b727220a95ULL + 0x6a09e667f3bcc909ULL);
    return splitmix64(s);
}

// xoshiro256** seeded through splitmix64. Self-contained so that streams are
// identical across platforms and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& word : state_) word = splitmix64(s);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Standard normal (Box-Muller); the second value of each pair is cached.
    double next_gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - next_unit(); // (0, 1], keeps log finite
        const double u2 = next_unit();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * 3.14159265358979323846 * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

inline std::vector<double> gaussian_vector(Rng& rng, std::size_t dim) {
    std::vector<double> v(dim);
    for (auto& x : v) x = rng.next_gaussian();
    return v;
}

} // namespace gwcut

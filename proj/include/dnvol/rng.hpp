#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace dnvol {

// All randomness in the project flows through this generator so that runs
// are reproducible bit-for-bit from (seed, stream). Streams let independent
// units of work (bootstrap resamples, synthetic seeds) draw from
// non-overlapping sequences regardless of evaluation order.
//
// Algorithm, pinned for output metadata: mt19937_64 seeded via splitmix64
// mixing of (seed, stream); normals by Box-Muller.
inline constexpr const char* kRngAlgorithm = "mt19937_64+splitmix64/box-muller v1";

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
        std::uint64_t s = seed;
        std::uint64_t mixed = splitmix64(s) ^ (stream * 0xda942042e4dd58b5ull);
        std::seed_seq seq{static_cast<std::uint32_t>(mixed),
                          static_cast<std::uint32_t>(mixed >> 32),
                          static_cast<std::uint32_t>(stream),
                          static_cast<std::uint32_t>(stream >> 32)};
        engine_.seed(seq);
    }

    // Uniform in (0, 1].
    double uniform01() {
        return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    }

    std::uint64_t uniform_below(std::uint64_t n) { return engine_() % n; }

    // Standard normal via Box-Muller; explicit so the draw sequence does not
    // depend on the standard library's normal_distribution implementation.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    // Random sign, +1 or -1.
    double sign() { return (engine_() & 1ull) ? 1.0 : -1.0; }

    // Student-t with 4 degrees of freedom: Z / sqrt(chi2_4 / 4).
    double student_t4() {
        double z = normal();
        double s = 0.0;
        for (int i = 0; i < 4; ++i) {
            double g = normal();
            s += g * g;
        }
        return z / std::sqrt(s / 4.0);
    }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace dnvol

#pragma once

#include <cstdint>

namespace mg {

/// Counter-based 64-bit generator (splitmix64): output i for seed s is
/// finalize(s + (i+1) * 0x9e3779b97f4a7c15). The reference sequence lives in
/// docs/rng-reference.txt and is frozen by a unit test, so independent
/// implementations can reproduce every sampled graph bit for bit.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    static uint64_t finalize(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t next() { return finalize(state_ += 0x9e3779b97f4a7c15ULL); }

    /// Unbiased draw from [0, range) by 128-bit multiply with rejection.
    uint64_t bounded(uint64_t range) {
        uint64_t threshold = (-range) % range;
        while (true) {
            unsigned __int128 prod = static_cast<unsigned __int128>(next()) * range;
            if (static_cast<uint64_t>(prod) >= threshold)
                return static_cast<uint64_t>(prod >> 64);
        }
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    uint64_t state_;
};

/// Two-round seed derivation for (cell, trial) grids; documented in the
/// README so runs can be reproduced trial by trial.
inline uint64_t derive_seed(uint64_t base, uint64_t a, uint64_t b) {
    uint64_t x = SplitMix64::finalize(base + (a + 1) * 0x9e3779b97f4a7c15ULL);
    return SplitMix64::finalize(x + (b + 1) * 0xbf58476d1ce4e5b9ULL);
}

}  // namespace mg

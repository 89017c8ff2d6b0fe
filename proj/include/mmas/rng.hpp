#pragma once

#include <cstdint>

namespace mmas {

// SplitMix64. One 64-bit word of state, bijective finalizer, no warmup
// needed. Every run owns its own instance; streams for grid experiments are
// derived by hashing (master, grid index, replicate index) so results do not
// depend on execution order or thread count.
class SplitMix64 {
 public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 random mantissa bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Finalizer alone; bijective on 64-bit words.
    static std::uint64_t mix(std::uint64_t x) {
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    // Stable stream derivation. Same inputs give the same seed on every
    // platform and schedule.
    static std::uint64_t derive(std::uint64_t master, std::uint64_t a,
                                std::uint64_t b) {
        return mix(master ^ mix(a ^ mix(b ^ 0x6A09E667F3BCC909ULL)));
    }

 private:
    std::uint64_t state_;
};

}  // namespace mmas

#pragma once

#include <cstddef>
#include <cstdint>

namespace testsupport {

struct EaResult {
    bool censored = true;
    std::uint64_t optimization_time = 0;
};

// Standalone (1+1)EA on OneMax, sharing only the RNG with the library. The
// initial string is uniform (one draw per bit), each later iteration flips
// every bit independently with probability 1/n, acceptance is > for the
// strict (EA*) variant and >= otherwise, and the initial construction counts
// as iteration 1.
EaResult run_ea_onemax(std::size_t n, bool strict, std::uint64_t seed,
                       std::uint64_t max_iterations);

}  // namespace testsupport

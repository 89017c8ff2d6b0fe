#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mmas/rng.hpp"

namespace mmas {

// Bit strings are dense vectors of 0/1 bytes, index 0 first.
using BitSolution = std::vector<std::uint8_t>;

std::size_t count_ones(const BitSolution& x);

// Pheromone vector for a chain graph with one stored value per position: the
// 1-edge value tau_i. The paired 0-edge value is defined as 1 - tau_i, never
// stored, so the pair identity holds exactly in floating point.
//
// Invariants kept by construction:
//   - every tau_i stays inside [1/n, 1-1/n] (clamps assign the exact border
//     constants, no arithmetic on the way out),
//   - rho is fixed for the lifetime of the state.
class PheromoneState {
 public:
    // Fresh state with every tau_i = 1/2. Requires n >= 2 and rho in (0, 1].
    PheromoneState(std::size_t n, double rho);

    // Adopt explicit values (instrument and test entry point). Each value
    // must already lie inside [1/n, 1-1/n].
    PheromoneState(std::vector<double> tau, double rho);

    std::size_t n() const { return tau_.size(); }
    double rho() const { return rho_; }
    double lower_border() const { return lo_; }
    double upper_border() const { return hi_; }

    double tau(std::size_t i) const { return tau_[i]; }
    // Derived 0-edge value of position i.
    double tau_zero(std::size_t i) const { return 1.0 - tau_[i]; }
    const std::vector<double>& values() const { return tau_; }

    // Construct one solution: bit i is 1 iff the i-th draw is < tau_i.
    // Consumes exactly n draws, in index order.
    BitSolution sample(SplitMix64& rng) const;

    // Bordered update toward `best`:
    //   reinforced 1:  tau_i <- min((1-rho) tau_i + rho, 1-1/n)
    //   reinforced 0:  tau_i <- max((1-rho) tau_i, 1/n)
    void update(const BitSolution& best);

    bool at_border(std::size_t i) const {
        return tau_[i] == lo_ || tau_[i] == hi_;
    }
    // Positions sitting exactly on either border.
    std::size_t saturated_count() const;

 private:
    std::vector<double> tau_;
    double rho_;
    double lo_;
    double hi_;
};

}  // namespace mmas

#include "mmas/pheromone.hpp"

#include <stdexcept>
#include <string>

namespace mmas {

std::size_t count_ones(const BitSolution& x) {
    std::size_t c = 0;
    for (auto b : x) c += b;
    return c;
}

static void check_params(std::size_t n, double rho) {
    if (n < 2) throw std::invalid_argument("pheromone: need n >= 2, got " + std::to_string(n));
    if (!(rho > 0.0) || rho > 1.0)
        throw std::invalid_argument("pheromone: rho must be in (0, 1], got " + std::to_string(rho));
}

PheromoneState::PheromoneState(std::size_t n, double rho)
    : tau_(n, 0.5), rho_(rho), lo_(1.0 / static_cast<double>(n)), hi_(1.0 - lo_) {
    check_params(n, rho);
    // n = 2 is the degenerate case: both borders equal 1/2 and every update
    // clamps straight back to 1/2.
}

PheromoneState::PheromoneState(std::vector<double> tau, double rho)
    : tau_(std::move(tau)), rho_(rho), lo_(1.0 / static_cast<double>(tau_.size())),
      hi_(1.0 - lo_) {
    check_params(tau_.size(), rho);
    for (double t : tau_) {
        if (!(t >= lo_) || !(t <= hi_))
            throw std::invalid_argument("pheromone: value outside borders: " + std::to_string(t));
    }
}

BitSolution PheromoneState::sample(SplitMix64& rng) const {
    BitSolution x(tau_.size());
    for (std::size_t i = 0; i < tau_.size(); ++i)
        x[i] = rng.next_double() < tau_[i] ? 1 : 0;
    return x;
}

void PheromoneState::update(const BitSolution& best) {
    if (best.size() != tau_.size())
        throw std::invalid_argument("pheromone: best length " + std::to_string(best.size()) +
                                    " != n " + std::to_string(tau_.size()));
    const double keep = 1.0 - rho_;
    for (std::size_t i = 0; i < tau_.size(); ++i) {
        if (best[i]) {
            const double t = keep * tau_[i] + rho_;
            tau_[i] = t < hi_ ? t : hi_;
        } else {
            const double t = keep * tau_[i];
            tau_[i] = t > lo_ ? t : lo_;
        }
    }
}

std::size_t PheromoneState::saturated_count() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < tau_.size(); ++i) c += at_border(i) ? 1 : 0;
    return c;
}

}  // namespace mmas

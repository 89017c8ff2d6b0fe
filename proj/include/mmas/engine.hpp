#pragma once

#include <cstdint>
#include <vector>

#include "mmas/fitness.hpp"
#include "mmas/pheromone.hpp"
#include "mmas/rng.hpp"

namespace mmas {

enum class Variant {
    mmas,       // accepts f(x) >= f(x*)
    mmas_star,  // accepts f(x) >  f(x*)
};

const char* variant_name(Variant v);

struct AlgorithmConfig {
    Variant variant = Variant::mmas;
    std::size_t n = 2;
    double rho = 0.5;
    std::uint64_t max_iterations = 100000000;  // hard cap, run is censored past it
    std::uint64_t seed = 0;
    bool stop_at_optimum = true;   // off: keep iterating after the optimum, for traces
    bool record_trace = false;     // fill RunResult::trace rows
    bool trace_snapshots = false;  // additionally keep tau after every iteration
};

// One row per iteration, written after that iteration's pheromone update.
struct TraceRow {
    std::uint64_t iteration = 0;
    double best_fitness = 0.0;
    double wps = 0.0;          // weighted pheromone sum of the post-update state
    int fitness_level = 0;     // level of x*; for leadingones the LO value itself
    int pheromone_level = 0;   // -1 when the function has no linear structure
    bool accepted = false;
    bool replaced = false;     // accepted and the string actually changed
    std::size_t saturated = 0; // positions at a border after the update
};

struct RunTrace {
    std::vector<TraceRow> rows;
    // When snapshots are on: snapshots[0] is the initial state, snapshots[t]
    // the state after iteration t, so size == rows.size() + 1.
    std::vector<std::vector<double>> snapshots;
};

// Callbacks fire synchronously inside run(); views are read-only and valid
// only during the call.
class RunObserver {
 public:
    virtual ~RunObserver() = default;

    struct View {
        std::uint64_t iteration;
        const PheromoneState& state;  // post-update
        const BitSolution& sampled;
        const BitSolution& best;
        double best_fitness;
        bool accepted;
        bool replaced;
    };

    virtual void on_start(const PheromoneState& /*initial*/) {}
    virtual void on_iteration(const View&) = 0;
};

struct RunResult {
    bool censored = true;
    std::uint64_t optimization_time = 0;   // first iteration whose x* is optimal; 0 if censored
    std::uint64_t iterations_executed = 0;
    BitSolution final_best;
    double final_best_value = 0.0;
    RunTrace trace;  // empty unless record_trace
};

// Acceptance test of the sampled solution against the current best, given
// their three-way comparison under the fitness function.
inline bool accepts(Variant v, int cmp) {
    return v == Variant::mmas ? cmp >= 0 : cmp > 0;
}
bool accepts(Variant v, const FitnessFunction& f, const FitnessValue& sampled,
             const FitnessValue& best);

// Full best-so-far run. The initial construction counts as iteration 1 and
// unconditionally installs x*. Optimality is detected structurally (all-ones
// string), never through float equality.
RunResult run(const AlgorithmConfig& cfg, const FitnessFunction& f,
              RunObserver* observer = nullptr);

}  // namespace mmas

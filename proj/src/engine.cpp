#include "mmas/engine.hpp"

#include <memory>
#include <stdexcept>
#include <string>

#include "mmas/instruments.hpp"

namespace mmas {

const char* variant_name(Variant v) {
    return v == Variant::mmas ? "mmas" : "mmas-star";
}

bool accepts(Variant v, const FitnessFunction& f, const FitnessValue& sampled,
             const FitnessValue& best) {
    return accepts(v, f.compare_values(sampled, best));
}

RunResult run(const AlgorithmConfig& cfg, const FitnessFunction& f, RunObserver* observer) {
    if (cfg.n != f.n())
        throw std::invalid_argument("engine: config n " + std::to_string(cfg.n) +
                                    " != function arity " + std::to_string(f.n()));
    if (cfg.max_iterations == 0)
        throw std::invalid_argument("engine: max_iterations must be >= 1");

    PheromoneState state(cfg.n, cfg.rho);
    SplitMix64 rng(cfg.seed);

    std::unique_ptr<TraceRecorder> recorder;
    if (cfg.record_trace)
        recorder = std::make_unique<TraceRecorder>(f, cfg.trace_snapshots);

    if (recorder) recorder->on_start(state);
    if (observer) observer->on_start(state);

    auto fire = [&](const RunObserver::View& v) {
        if (recorder) recorder->on_iteration(v);
        if (observer) observer->on_iteration(v);
    };

    RunResult out;

    // Iteration 1: the initial construction installs x* unconditionally.
    BitSolution x = state.sample(rng);
    BitSolution xstar = x;
    double fbest = f.evaluate(xstar).value;
    state.update(xstar);
    std::uint64_t t = 1;
    bool optimal = f.is_optimal(xstar);
    if (optimal) out.optimization_time = 1;
    fire({t, state, x, xstar, fbest, true, false});

    while (t < cfg.max_iterations && !(optimal && cfg.stop_at_optimum)) {
        ++t;
        x = state.sample(rng);
        const int cmp = f.compare(x, xstar);
        const bool accepted = accepts(cfg.variant, cmp);
        bool replaced = false;
        if (accepted && x != xstar) {
            replaced = true;
            xstar = x;
            fbest = f.evaluate(xstar).value;
        }
        state.update(xstar);
        if (!optimal && f.is_optimal(xstar)) {
            optimal = true;
            out.optimization_time = t;
        }
        fire({t, state, x, xstar, fbest, accepted, replaced});
    }

    out.censored = !optimal;
    if (out.censored) out.optimization_time = 0;
    out.iterations_executed = t;
    out.final_best = std::move(xstar);
    out.final_best_value = fbest;
    if (recorder) out.trace = recorder->take();
    return out;
}

}  // namespace mmas

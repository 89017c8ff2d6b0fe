#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mmas/engine.hpp"
#include "mmas/fitness.hpp"
#include "mmas/pheromone.hpp"

namespace mmas {

// Shared absolute slack for every lemma-style inequality check. Covers float
// accumulation noise only; genuine violations sit orders of magnitude above.
inline constexpr double kLevelSlack = 1e-9;

// ---- weighted pheromone sums and level coordinates ----

// f(tau) = sum_i w_i tau_i, summed in index order.
double wps(const std::vector<double>& weights, const std::vector<double>& tau);
double wps(const FitnessFunction& f, const PheromoneState& s);

// v(x) = sum over bits of w_i (1-1/n) for ones and w_i / n for zeros: the
// weighted sum after full border saturation toward x.
double v_of(const FitnessFunction& f, const BitSolution& x);

// v(a_i) for the prefix string a_i with the i heaviest positions set.
// i = -1 is defined as 0 so level searches are total.
double v_prefix(const FitnessFunction& f, int i);
// alpha_i = (1-1/n) * sum of the i heaviest weights.
double alpha_prefix(const FitnessFunction& f, int i);

// a_i itself, in sorted-position space: i ones then n-i zeros.
BitSolution prefix_point(std::size_t n, std::size_t i);

// Largest i with prefix_i <= f(x), where prefix_i sums the i heaviest
// weights. Exact for binval (equals the leading-ones count) and for integer
// weights; plain float compare otherwise.
int fitness_level(const FitnessFunction& f, const BitSolution& x);
int fitness_level_value(const FitnessFunction& f, double fx);

// Largest i in [-1, n] with v(a_i) <= value + slack.
int pheromone_level_value(const FitnessFunction& f, double value);
int pheromone_level(const FitnessFunction& f, const PheromoneState& s);

// Copy of x with its leftmost zero set; rejects all-ones input.
BitSolution leftmost_zero_flip(const BitSolution& x);

// ceil(ln n / rho): the saturation budget for one fixed x*.
std::uint64_t freezing_bound(std::size_t n, double rho);

// Uniform vector inside [1/n, 1-1/n] per coordinate.
std::vector<double> random_tau(std::size_t n, SplitMix64& rng);

// ---- observers ----

// Builds a RunTrace while a run executes.
class TraceRecorder : public RunObserver {
 public:
    TraceRecorder(const FitnessFunction& f, bool snapshots);
    void on_start(const PheromoneState& s) override;
    void on_iteration(const View& v) override;
    RunTrace take() { return std::move(trace_); }
    const RunTrace& trace() const { return trace_; }

 private:
    const FitnessFunction* f_;
    bool snapshots_;
    RunTrace trace_;
};

// Tracks, per stretch of iterations sharing one x*, how many updates each
// bit needs to reach the border it is being pushed toward. A window whose
// x* survives past freezing_bound(n, rho) updates with some bit still off
// its target border counts as a violation.
class FreezingTracker : public RunObserver {
 public:
    FreezingTracker(std::size_t n, double rho);
    void on_iteration(const View& v) override;

    std::uint64_t bound() const { return bound_; }
    std::uint64_t window_count() const { return windows_; }
    std::uint64_t violation_count() const { return violations_; }
    // Largest saturation lag over windows that reached full saturation.
    std::uint64_t max_saturation_lag() const { return max_lag_; }
    std::uint64_t current_window_start() const { return window_start_; }
    // First iteration at which each bit sat on its target border within the
    // current window; 0 = not yet.
    const std::vector<std::uint64_t>& first_border_iteration() const { return first_at_; }

 private:
    void reset_window(std::uint64_t start_iteration);

    std::size_t n_;
    std::uint64_t bound_;
    std::uint64_t windows_ = 0;
    std::uint64_t violations_ = 0;
    std::uint64_t max_lag_ = 0;
    std::uint64_t window_start_ = 0;
    bool window_saturated_ = false;
    bool window_violated_ = false;
    std::vector<std::uint64_t> first_at_;
};

// ---- trace checks ----

enum class DriftCheckKind { one_step, multi_step, no_decrease };

struct DriftWitness {
    DriftCheckKind kind = DriftCheckKind::one_step;
    std::uint64_t iteration = 0;
    int i = 0;
    int j = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    bool escaped = false;
};

struct DriftReport {
    std::uint64_t one_step_checked = 0;
    std::uint64_t one_step_violations = 0;
    std::uint64_t multi_step_checked = 0;
    std::uint64_t multi_step_violations = 0;
    std::uint64_t no_decrease_checked = 0;
    std::uint64_t no_decrease_violations = 0;
    // Violations only, capped by the caller-facing constant below.
    std::vector<DriftWitness> witnesses;

    std::uint64_t total_violations() const {
        return one_step_violations + multi_step_violations + no_decrease_violations;
    }
};

inline constexpr std::size_t kMaxWitnesses = 1000;

// Per-step, windowed, and no-decrease pheromone-sum checks over one OneMax
// trace recorded with snapshots. Unit weights are required.
//
// One step at iteration t, premise level(f_before) = i < j = ones(x*):
//   f_after >= v(a_{i+1}) - tol, or
//   f_after >= alpha_i + (f_before - alpha_i)(1 - rho) + (j - i) rho - tol.
// Windowed, premise level(f_at_start) = i < j = min ones(x*) in window:
//   f_t >= v(a_{i+1}) - tol, or f_t - alpha_i >= (j - i)(1 - (1-rho)^t) - tol.
// No decrease at iteration t, m = min(level before, ones(x*) - 1) >= 0:
//   f_after >= v(a_m) - tol.
DriftReport drift_check_onemax(const FitnessFunction& f, const RunTrace& trace,
                               double rho, double tol = kLevelSlack);

// CSV with header "iteration, i, j, lhs, rhs, escaped".
void write_witness_csv(const std::vector<DriftWitness>& witnesses, const std::string& path);

struct SaturationReport {
    std::uint64_t windows_checked = 0;
    std::uint64_t violations = 0;        // pheromone level below the window's fitness level
    std::uint64_t proof_violations = 0;  // same but against (1-1/n) f(a_i) instead of v(a_i)
    double worst_deficit = 0.0;          // max of v(a_i) - wps over violations
    std::uint64_t first_violation_start = 0;
    int first_violation_needed = 0;
    int first_violation_got = 0;
};

// Sliding windows of length freezing_bound(n, rho): after a stretch at
// fitness level >= i, the pheromone level must have caught up to i.
SaturationReport saturation_check(const FitnessFunction& f, const RunTrace& trace,
                                  double rho, double tol = kLevelSlack);

// ---- layers ----

// Largest i in [0, n] such that the i smallest pheromones, ascending, all
// clear their rank threshold: tau_(j) >= min(1-1/n, 1-(1-rho)^(j*ell)) for
// j = 1..i.
int layer_index(const std::vector<double>& tau, double rho, int ell);
int layer_index(const PheromoneState& s, int ell);

// Counts how often the sampled string preserves the current leading-ones
// prefix of x*, and follows the layer index along a run.
class LayerWatcher : public RunObserver {
 public:
    LayerWatcher(double rho, int ell);
    void on_iteration(const View& v) override;

    std::uint64_t iterations() const { return iterations_; }
    std::uint64_t rediscoveries() const { return rediscoveries_; }
    double rediscovery_rate() const;
    int last_layer_index() const { return last_layer_; }
    int min_layer_index() const { return min_layer_; }
    int ell() const { return ell_; }

 private:
    double rho_;
    int ell_;
    std::uint64_t iterations_ = 0;
    std::uint64_t rediscoveries_ = 0;
    std::size_t prev_lo_ = 0;
    int last_layer_ = 0;
    int min_layer_ = -1;
    std::vector<double> thresholds_;
};

// ---- sampled-ones distribution and prefix-dominance tail check ----

inline constexpr std::size_t kOnesDistributionGuard = 30;

// Exact distribution of the number of sampled ones under independent bits:
// result[k] = P(exactly k ones). O(n^2), guarded to n <= 30.
std::vector<double> exact_ones_distribution(const std::vector<double>& tau);
std::vector<double> exact_ones_distribution(const PheromoneState& s);

// P(at least m ones) under the distribution above.
double ones_tail(const std::vector<double>& dist, int m);

// For every j, the sum of the j smallest entries of tau is at least the sum
// of the j smallest entries of tau_prime.
bool gleser_premise(const std::vector<double>& tau, const std::vector<double>& tau_prime);

struct GleserResult {
    bool premise = false;
    bool holds = false;   // meaningful only when premise is true
    double lambda = 0.0;  // sum of tau_prime
    int m = 0;            // floor(lambda + 1)
    double p_tau = 0.0;        // P(ones(tau) >= m)
    double p_tau_prime = 0.0;  // P(ones(tau_prime) >= m)
};

// Tail comparison at m = floor(lambda + 1), lambda = sum of tau_prime: holds
// iff tau is at least as likely as tau_prime to sample >= m ones (up to DP
// float noise).
GleserResult gleser_verify(const std::vector<double>& tau, const std::vector<double>& tau_prime);

}  // namespace mmas

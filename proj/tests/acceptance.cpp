// Acceptance gate: nine numbered criteria, one PASS/FAIL line each, detail
// lines indented underneath. Exit code is the number of failed criteria.
// Usage: acceptance [--criterion N]   (N = 0 or absent runs all nine)

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "mmas/engine.hpp"
#include "mmas/fitness.hpp"
#include "mmas/harness.hpp"
#include "mmas/instruments.hpp"
#include "mmas/pheromone.hpp"
#include "mmas/rng.hpp"
#include "mmas/stats.hpp"
#include "support/ea_oracle.hpp"

using namespace mmas;

namespace {

constexpr std::uint64_t kMasterSeed = 42;

constexpr double kC1TimeBudget = 1.0;    // seconds; border arrival itself is exact
constexpr double kC2TimeBudget = 5.0;    // seconds; invariants are exact
constexpr std::uint64_t kC2Updates = 1000000;
constexpr double kC3TimeBudget = 30.0;   // seconds; zero drift violations at kLevelSlack
constexpr double kC5DpTol = 1e-12;       // DP vs enumeration agreement
constexpr double kC5TimeBudget = 60.0;   // seconds
constexpr std::uint64_t kC5PairsPerN = 10000;
constexpr double kC6MeanTol = 0.05;      // relative gap between paired means
constexpr double kC6TimeBudget = 120.0;  // seconds
constexpr double kC7RatioLo = 1.8;       // doubling-window for mean(2n)/mean(n)
constexpr double kC7RatioHi = 2.6;
constexpr double kC8MinRSquared = 0.9;
constexpr double kC8MaxEndpointRatio = 2.3;
constexpr double kC8TimeBudget = 600.0;  // seconds

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void verdict(int criterion, bool pass, const std::string& summary) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, summary.c_str());
}

void detail(const std::string& line) { std::printf("       %s\n", line.c_str()); }

std::string fmt(double x) { return format_double(x); }

// ---- criterion 1: deterministic freezing inside ceil(ln n / rho) ----

bool criterion_1() {
    Timer timer;
    const std::size_t ns[3] = {10, 100, 1000};
    const double rhos[3] = {0.5, 0.1, 0.01};
    bool ok = true;
    std::uint64_t cells = 0;
    for (std::size_t n : ns) {
        const double lo = 1.0 / static_cast<double>(n);
        const double hi = 1.0 - lo;
        for (double rho : rhos) {
            const std::uint64_t k = freezing_bound(n, rho);
            for (int pattern = 0; pattern < 3; ++pattern) {
                BitSolution target(n);
                for (std::size_t i = 0; i < n; ++i)
                    target[i] = pattern == 0 ? 1 : pattern == 1 ? 0 : (i % 2 == 0);
                // adversarial start: every pheromone on the border opposite
                // its target
                std::vector<double> start(n);
                for (std::size_t i = 0; i < n; ++i) start[i] = target[i] ? lo : hi;
                PheromoneState s(start, rho);
                for (std::uint64_t t = 0; t < k; ++t) s.update(target);
                for (std::size_t i = 0; i < n; ++i) {
                    const double want = target[i] ? hi : lo;
                    if (s.tau(i) != want) {
                        ok = false;
                        detail("n=" + std::to_string(n) + " rho=" + fmt(rho) + " pattern " +
                               std::to_string(pattern) + " bit " + std::to_string(i) +
                               " stuck at " + fmt(s.tau(i)) + " after " + std::to_string(k) +
                               " updates");
                    }
                }
                ++cells;
            }
        }
    }
    const double elapsed = timer.seconds();
    if (elapsed >= kC1TimeBudget) ok = false;
    verdict(1, ok,
            "freezing reaches exact borders within ceil(ln n / rho) updates (" +
                std::to_string(cells) + " grid cells, " + fmt(elapsed) + " s < " +
                fmt(kC1TimeBudget) + " s)");
    return ok;
}

// ---- criterion 2: border containment and bitwise 1-edge/0-edge coupling ----

bool criterion_2() {
    Timer timer;
    struct Slice {
        std::size_t n;
        std::uint64_t steps;
    };
    const Slice slices[6] = {{2, 100000},  {3, 200000},   {5, 250000},
                             {17, 250000}, {100, 150000}, {1000, 50000}};
    bool ok = true;
    std::uint64_t total = 0, bad_border = 0, bad_sum = 0;
    for (const Slice& sl : slices) {
        const double lo = 1.0 / static_cast<double>(sl.n);
        const double hi = 1.0 - lo;
        PheromoneState s(sl.n, 0.3);
        SplitMix64 rng(SplitMix64::derive(kMasterSeed, sl.n, 2));
        BitSolution best(sl.n);
        for (std::uint64_t t = 0; t < sl.steps; ++t) {
            for (auto& b : best) b = rng.next_u64() & 1;
            s.update(best);
            for (std::size_t i = 0; i < sl.n; ++i) {
                const double tau = s.tau(i);
                if (tau < lo || tau > hi) ++bad_border;
                if (tau + s.tau_zero(i) != 1.0) ++bad_sum;
            }
        }
        total += sl.steps;
    }
    if (bad_border || bad_sum) ok = false;
    const double elapsed = timer.seconds();
    if (elapsed >= kC2TimeBudget) ok = false;
    if (total != kC2Updates) ok = false;
    verdict(2, ok,
            std::to_string(total) + " random updates: " + std::to_string(bad_border) +
                " border escapes, " + std::to_string(bad_sum) +
                " non-exact edge sums (" + fmt(elapsed) + " s < " + fmt(kC2TimeBudget) + " s)");
    return ok;
}

// ---- criteria 3 and 4 share the six reference traces ----

struct TraceCase {
    Variant variant;
    double rho;
    RunTrace trace;
};

std::vector<TraceCase> reference_traces() {
    const std::size_t n = 50;
    const auto f = FitnessFunction::onemax(n);
    const Variant variants[2] = {Variant::mmas, Variant::mmas_star};
    const double rhos[3] = {0.5, 0.1, 0.02};
    std::vector<TraceCase> out;
    for (int vi = 0; vi < 2; ++vi) {
        for (int ri = 0; ri < 3; ++ri) {
            AlgorithmConfig cfg;
            cfg.variant = variants[vi];
            cfg.n = n;
            cfg.rho = rhos[ri];
            cfg.seed = SplitMix64::derive(kMasterSeed, static_cast<std::uint64_t>(vi),
                                          static_cast<std::uint64_t>(ri));
            cfg.max_iterations = 20000;
            cfg.stop_at_optimum = false;
            cfg.record_trace = true;
            cfg.trace_snapshots = true;
            TraceCase tc{variants[vi], rhos[ri], run(cfg, f).trace};
            out.push_back(std::move(tc));
        }
    }
    return out;
}

bool criterion_3() {
    Timer timer;
    const auto f = FitnessFunction::onemax(50);
    bool ok = true;
    std::uint64_t checked = 0, violations = 0;
    for (const auto& tc : reference_traces()) {
        const DriftReport rep = drift_check_onemax(f, tc.trace, tc.rho);
        checked += rep.one_step_checked + rep.multi_step_checked + rep.no_decrease_checked;
        violations += rep.total_violations();
        if (rep.total_violations()) {
            ok = false;
            const DriftWitness& w = rep.witnesses.front();
            detail(std::string(variant_name(tc.variant)) + " rho=" + fmt(tc.rho) +
                   ": first witness iteration=" + std::to_string(w.iteration) +
                   " i=" + std::to_string(w.i) + " j=" + std::to_string(w.j) +
                   " lhs=" + fmt(w.lhs) + " rhs=" + fmt(w.rhs));
        }
    }
    const double elapsed = timer.seconds();
    if (elapsed >= kC3TimeBudget) ok = false;
    verdict(3, ok,
            "drift inequalities over 6 traces (n=50, 20000 iterations): " +
                std::to_string(violations) + " violations in " + std::to_string(checked) +
                " checks (" + fmt(elapsed) + " s < " + fmt(kC3TimeBudget) + " s)");
    return ok;
}

bool criterion_4() {
    const auto f = FitnessFunction::onemax(50);
    bool ok = true;
    std::uint64_t windows = 0, violations = 0;
    for (const auto& tc : reference_traces()) {
        const SaturationReport rep = saturation_check(f, tc.trace, tc.rho);
        windows += rep.windows_checked;
        violations += rep.violations;
        if (rep.violations) {
            ok = false;
            detail(std::string(variant_name(tc.variant)) + " rho=" + fmt(tc.rho) + ": " +
                   std::to_string(rep.violations) + " late windows, first at iteration " +
                   std::to_string(rep.first_violation_start) + " (needed level " +
                   std::to_string(rep.first_violation_needed) + ", got " +
                   std::to_string(rep.first_violation_got) + ", worst deficit " +
                   fmt(rep.worst_deficit) + ")");
        }
    }
    verdict(4, ok,
            "saturation windows over the same 6 traces: " + std::to_string(violations) +
                " violations in " + std::to_string(windows) + " windows");
    return ok;
}

// ---- criterion 5: tail dominance under prefix dominance, plus DP oracle ----

bool criterion_5() {
    Timer timer;
    bool ok = true;

    for (std::size_t n : {std::size_t{5}, std::size_t{10}, std::size_t{20}}) {
        SplitMix64 rng(SplitMix64::derive(kMasterSeed, n, 0));
        std::uint64_t tested = 0, counterexamples = 0, attempts = 0;
        const std::uint64_t max_attempts = kC5PairsPerN * 2000;
        GleserResult first;
        std::vector<double> first_tau, first_taup;
        while (tested < kC5PairsPerN && attempts < max_attempts) {
            ++attempts;
            std::vector<double> tau = random_tau(n, rng);
            std::vector<double> taup = random_tau(n, rng);
            if (!gleser_premise(tau, taup)) continue;
            ++tested;
            const GleserResult r = gleser_verify(tau, taup);
            if (!r.holds) {
                if (counterexamples == 0) {
                    first = r;
                    first_tau = tau;
                    first_taup = taup;
                }
                ++counterexamples;
            }
        }
        detail("n=" + std::to_string(n) + ": " + std::to_string(tested) +
               " premise pairs, " + std::to_string(counterexamples) + " counterexamples");
        if (counterexamples) {
            ok = false;
            std::string lt = "  first: lambda=" + fmt(first.lambda) +
                             " m=" + std::to_string(first.m) + " P(tau)=" + fmt(first.p_tau) +
                             " P(tau')=" + fmt(first.p_tau_prime);
            detail(lt);
            std::string vt = "  tau  =";
            for (double t : first_tau) vt += " " + fmt(t);
            detail(vt);
            std::string vp = "  tau' =";
            for (double t : first_taup) vp += " " + fmt(t);
            detail(vp);
        }
    }

    // independent oracle for the tails used above: O(n^2) DP against the
    // full 2^n enumeration
    double worst = 0.0;
    for (std::size_t n = 2; n <= 12; ++n) {
        SplitMix64 rng(SplitMix64::derive(kMasterSeed, n, 1));
        for (int t = 0; t < 50; ++t) {
            const auto tau = random_tau(n, rng);
            const auto dp = exact_ones_distribution(tau);
            std::vector<double> acc(n + 1, 0.0);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                double p = 1.0;
                int ones = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (mask >> i & 1) {
                        p *= tau[i];
                        ++ones;
                    } else {
                        p *= 1.0 - tau[i];
                    }
                }
                acc[static_cast<std::size_t>(ones)] += p;
            }
            for (std::size_t k = 0; k <= n; ++k)
                worst = std::max(worst, std::abs(dp[k] - acc[k]));
        }
    }
    detail("dp vs enumeration (n <= 12): max |diff| = " + fmt(worst) + " (tol " +
           fmt(kC5DpTol) + ")");
    if (worst > kC5DpTol) ok = false;

    const double elapsed = timer.seconds();
    if (elapsed >= kC5TimeBudget) ok = false;
    verdict(5, ok,
            "prefix dominance forces the >= floor(lambda+1) tail on sampled pairs (" +
                fmt(elapsed) + " s < " + fmt(kC5TimeBudget) + " s)");
    return ok;
}

// ---- criterion 6: rho = 1 strict variant equals the unit-mutation climber ----

bool criterion_6() {
    Timer timer;
    bool ok = true;

    // structural half: the post-update state is fully saturated from the
    // first iteration on, so it is exactly the borders of the current best
    {
        AlgorithmConfig cfg;
        cfg.variant = Variant::mmas_star;
        cfg.n = 20;
        cfg.rho = 1.0;
        cfg.seed = SplitMix64::derive(kMasterSeed, 6, 0);
        cfg.max_iterations = 500;
        cfg.stop_at_optimum = false;
        cfg.record_trace = true;
        const auto res = run(cfg, FitnessFunction::onemax(20));
        std::uint64_t unsaturated = 0;
        for (const auto& row : res.trace.rows)
            if (row.saturated != 20) ++unsaturated;
        detail("saturated rows: " + std::to_string(res.trace.rows.size() - unsaturated) + "/" +
               std::to_string(res.trace.rows.size()));
        if (unsaturated) ok = false;
    }

    const std::size_t n = 100, reps = 1000;
    const auto f = FitnessFunction::onemax(n);
    double mmas_total = 0.0, ea_total = 0.0;
    for (std::size_t r = 0; r < reps; ++r) {
        const std::uint64_t seed = SplitMix64::derive(kMasterSeed, 0, r);
        AlgorithmConfig cfg;
        cfg.variant = Variant::mmas_star;
        cfg.n = n;
        cfg.rho = 1.0;
        cfg.seed = seed;
        const auto rr = run(cfg, f);
        if (rr.censored) {
            ok = false;
            continue;
        }
        mmas_total += static_cast<double>(rr.optimization_time);
        const auto ea = testsupport::run_ea_onemax(n, true, seed, 100000000);
        if (ea.censored) {
            ok = false;
            continue;
        }
        ea_total += static_cast<double>(ea.optimization_time);
    }
    const double mmas_mean = mmas_total / static_cast<double>(reps);
    const double ea_mean = ea_total / static_cast<double>(reps);
    const double gap = std::abs(mmas_mean / ea_mean - 1.0);
    detail("n=100, 1000 replicates: mean=" + fmt(mmas_mean) + " vs climber mean=" +
           fmt(ea_mean) + ", relative gap " + fmt(gap) + " (tol " + fmt(kC6MeanTol) + ")");
    if (gap > kC6MeanTol) ok = false;

    const double elapsed = timer.seconds();
    if (elapsed >= kC6TimeBudget) ok = false;
    verdict(6, ok,
            "rho=1 strict acceptance: saturated from the start and paired with the "
            "unit-mutation climber (" +
                fmt(elapsed) + " s < " + fmt(kC6TimeBudget) + " s)");
    return ok;
}

// ---- criterion 7: doubling n roughly doubles the mean optimization time ----

bool criterion_7() {
    const auto plan = parse_plan_text(
        "function = onemax\nvariants = mmas-star\nn = 50, 100, 200\nrho = 1\n"
        "replicates = 1000\nmaster_seed = 42\n");
    const auto rows = execute(plan);
    bool ok = rows.size() == 3;
    double mean[3] = {0, 0, 0};
    for (std::size_t i = 0; ok && i < 3; ++i) {
        if (rows[i].censored) ok = false;
        mean[i] = rows[i].stats.mean;
    }
    const double r1 = mean[1] / mean[0];
    const double r2 = mean[2] / mean[1];
    detail("means: n=50 " + fmt(mean[0]) + ", n=100 " + fmt(mean[1]) + ", n=200 " +
           fmt(mean[2]));
    detail("ratios: " + fmt(r1) + ", " + fmt(r2) + " (window [" + fmt(kC7RatioLo) + ", " +
           fmt(kC7RatioHi) + "])");
    if (!(r1 >= kC7RatioLo && r1 <= kC7RatioHi)) ok = false;
    if (!(r2 >= kC7RatioLo && r2 <= kC7RatioHi)) ok = false;
    verdict(7, ok, "mean optimization time scales near-linearly in n at rho=1");
    return ok;
}

// ---- criterion 8: slow evaporation costs time linearly in 1/rho ----

bool criterion_8() {
    Timer timer;
    const auto plan = parse_plan_text(
        "function = onemax\nvariants = mmas\nn = 50\nrho_inverse = 501:1001:50\n"
        "replicates = 200\nmaster_seed = 42\n");
    const auto rows = execute(plan);
    bool ok = rows.size() == 11;
    for (const auto& r : rows)
        if (r.censored) ok = false;

    const RegressionFit fit = regress_tail(rows, 500.0, 1001.0);
    const double endpoint_ratio = rows.back().stats.mean / rows.front().stats.mean;
    detail("ols over 1/rho in (500, 1001]: slope=" + fmt(fit.slope) +
           " intercept=" + fmt(fit.intercept) + " r_squared=" + fmt(fit.r_squared) + " (" +
           std::to_string(fit.points) + " points)");
    detail("endpoint means: " + fmt(rows.front().stats.mean) + " -> " +
           fmt(rows.back().stats.mean) + ", ratio " + fmt(endpoint_ratio) + " (max " +
           fmt(kC8MaxEndpointRatio) + ")");
    if (!(fit.slope > 0.0)) ok = false;
    if (!(fit.r_squared >= kC8MinRSquared)) ok = false;
    if (!(endpoint_ratio <= kC8MaxEndpointRatio)) ok = false;

    const double elapsed = timer.seconds();
    if (elapsed >= kC8TimeBudget) ok = false;
    verdict(8, ok,
            "mean time grows linearly in 1/rho without doubling across the window (" +
                fmt(elapsed) + " s < " + fmt(kC8TimeBudget) + " s)");
    return ok;
}

// ---- criterion 9: binval never loses leading ones of the best ----

class LoMonotoneProbe : public RunObserver {
 public:
    std::uint64_t drops = 0;

    void on_iteration(const View& v) override {
        std::size_t lo = 0;
        while (lo < v.best.size() && v.best[lo]) ++lo;
        if (lo < prev_) ++drops;
        prev_ = lo;
    }

 private:
    std::size_t prev_ = 0;
};

bool criterion_9() {
    const std::size_t n = 100;
    const auto f = FitnessFunction::binval(n);
    const Variant variants[2] = {Variant::mmas, Variant::mmas_star};
    bool ok = true;
    std::uint64_t drops = 0, censored = 0;
    for (int vi = 0; vi < 2; ++vi) {
        for (std::size_t r = 0; r < 50; ++r) {
            LoMonotoneProbe probe;
            AlgorithmConfig cfg;
            cfg.variant = variants[vi];
            cfg.n = n;
            cfg.rho = 0.1;
            cfg.seed = SplitMix64::derive(kMasterSeed, static_cast<std::uint64_t>(vi), r);
            const auto res = run(cfg, f, &probe);
            drops += probe.drops;
            if (res.censored) ++censored;
        }
    }
    if (drops || censored) ok = false;
    verdict(9, ok,
            "leading ones of the best are monotone over 100 full binval runs (" +
                std::to_string(drops) + " drops, " + std::to_string(censored) + " censored)");
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    int criterion = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            criterion = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 1;
        }
    }
    if (criterion < 0 || criterion > 9) {
        std::fprintf(stderr, "criterion must be 1..9 (0 = all)\n");
        return 1;
    }

    bool (*checks[9])() = {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                           criterion_6, criterion_7, criterion_8, criterion_9};
    int failures = 0;
    for (int c = 1; c <= 9; ++c) {
        if (criterion && c != criterion) continue;
        if (!checks[c - 1]()) ++failures;
    }
    return failures;
}

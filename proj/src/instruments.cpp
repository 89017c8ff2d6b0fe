#include "mmas/instruments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>

namespace mmas {

double wps(const std::vector<double>& weights, const std::vector<double>& tau) {
    if (weights.size() != tau.size())
        throw std::invalid_argument("wps: weight/tau length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) s += weights[i] * tau[i];
    return s;
}

double wps(const FitnessFunction& f, const PheromoneState& s) {
    if (!f.is_linear()) throw std::invalid_argument("wps: function has no weights");
    return wps(f.weights(), s.values());
}

double v_of(const FitnessFunction& f, const BitSolution& x) {
    if (!f.is_linear()) throw std::invalid_argument("v_of: function has no weights");
    if (x.size() != f.n()) throw std::invalid_argument("v_of: length mismatch");
    const double n = static_cast<double>(f.n());
    const double hi = 1.0 - 1.0 / n;
    const double lo = 1.0 / n;
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += f.weights()[i] * (x[i] ? hi : lo);
    return s;
}

double v_prefix(const FitnessFunction& f, int i) {
    if (i < 0) return 0.0;
    if (static_cast<std::size_t>(i) > f.n()) throw std::invalid_argument("v_prefix: i > n");
    const double n = static_cast<double>(f.n());
    const double p = f.sorted_prefix()[static_cast<std::size_t>(i)];
    return (1.0 - 1.0 / n) * p + (f.total_weight() - p) / n;
}

double alpha_prefix(const FitnessFunction& f, int i) {
    if (i < 0) return 0.0;
    if (static_cast<std::size_t>(i) > f.n()) throw std::invalid_argument("alpha_prefix: i > n");
    const double n = static_cast<double>(f.n());
    return (1.0 - 1.0 / n) * f.sorted_prefix()[static_cast<std::size_t>(i)];
}

BitSolution prefix_point(std::size_t n, std::size_t i) {
    if (i > n) throw std::invalid_argument("prefix_point: i > n");
    BitSolution x(n, 0);
    std::fill(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i), 1);
    return x;
}

int fitness_level_value(const FitnessFunction& f, double fx) {
    const auto& p = f.sorted_prefix();
    // Largest i with p[i] <= fx. Prefixes are strictly increasing.
    auto it = std::upper_bound(p.begin(), p.end(), fx);
    return static_cast<int>(it - p.begin()) - 1;
}

int fitness_level(const FitnessFunction& f, const BitSolution& x) {
    if (f.kind() == FitnessKind::binval) {
        // Exact: with weights 2^(n-1-i), f(x) >= prefix_i iff the first i
        // bits are all ones.
        std::size_t c = 0;
        while (c < x.size() && x[c]) ++c;
        return static_cast<int>(c);
    }
    if (!f.is_linear()) throw std::invalid_argument("fitness_level: function has no weights");
    return fitness_level_value(f, f.evaluate(x).value);
}

int pheromone_level_value(const FitnessFunction& f, double value) {
    for (int i = static_cast<int>(f.n()); i >= 0; --i)
        if (v_prefix(f, i) <= value + kLevelSlack) return i;
    return -1;
}

int pheromone_level(const FitnessFunction& f, const PheromoneState& s) {
    return pheromone_level_value(f, wps(f, s));
}

BitSolution leftmost_zero_flip(const BitSolution& x) {
    BitSolution y = x;
    for (auto& b : y) {
        if (!b) {
            b = 1;
            return y;
        }
    }
    throw std::invalid_argument("leftmost_zero_flip: no zero to flip");
}

std::uint64_t freezing_bound(std::size_t n, double rho) {
    return static_cast<std::uint64_t>(std::ceil(std::log(static_cast<double>(n)) / rho));
}

std::vector<double> random_tau(std::size_t n, SplitMix64& rng) {
    const double lo = 1.0 / static_cast<double>(n);
    const double hi = 1.0 - lo;
    std::vector<double> tau(n);
    for (auto& t : tau) t = lo + rng.next_double() * (hi - lo);
    return tau;
}

// ---- TraceRecorder ----

TraceRecorder::TraceRecorder(const FitnessFunction& f, bool snapshots)
    : f_(&f), snapshots_(snapshots) {}

void TraceRecorder::on_start(const PheromoneState& s) {
    if (snapshots_) trace_.snapshots.push_back(s.values());
}

void TraceRecorder::on_iteration(const View& v) {
    TraceRow r;
    r.iteration = v.iteration;
    r.best_fitness = v.best_fitness;
    if (f_->is_linear()) {
        r.wps = wps(*f_, v.state);
        r.pheromone_level = pheromone_level_value(*f_, r.wps);
        r.fitness_level = fitness_level(*f_, v.best);
    } else {
        r.wps = 0.0;
        r.pheromone_level = -1;
        r.fitness_level = static_cast<int>(v.best_fitness);
    }
    r.accepted = v.accepted;
    r.replaced = v.replaced;
    r.saturated = v.state.saturated_count();
    trace_.rows.push_back(r);
    if (snapshots_) trace_.snapshots.push_back(v.state.values());
}

// ---- FreezingTracker ----

FreezingTracker::FreezingTracker(std::size_t n, double rho)
    : n_(n), bound_(freezing_bound(n, rho)), first_at_(n, 0) {}

void FreezingTracker::reset_window(std::uint64_t start) {
    window_start_ = start;
    std::fill(first_at_.begin(), first_at_.end(), 0);
    window_saturated_ = false;
    window_violated_ = false;
    ++windows_;
}

void FreezingTracker::on_iteration(const View& v) {
    if (window_start_ == 0 || v.replaced) reset_window(v.iteration);
    bool all = true;
    for (std::size_t i = 0; i < n_; ++i) {
        const double target = v.best[i] ? v.state.upper_border() : v.state.lower_border();
        if (v.state.tau(i) == target) {
            if (!first_at_[i]) first_at_[i] = v.iteration;
        } else {
            first_at_[i] = 0;
            all = false;
        }
    }
    const std::uint64_t lag = v.iteration - window_start_ + 1;
    if (all && !window_saturated_) {
        window_saturated_ = true;
        std::uint64_t wl = 0;
        for (std::size_t i = 0; i < n_; ++i)
            wl = std::max(wl, first_at_[i] - window_start_ + 1);
        max_lag_ = std::max(max_lag_, wl);
    }
    if (!all && lag >= bound_ && !window_violated_) {
        window_violated_ = true;
        ++violations_;
    }
}

// ---- drift and saturation checks over traces ----

namespace {

struct TraceSeries {
    std::size_t T = 0;
    std::vector<double> w;    // w[t] = weighted pheromone sum after iteration t, w[0] initial
    std::vector<int> ones;    // ones[t] = fitness level of x* installed at iteration t (t >= 1)
    std::vector<int> lvl;     // lvl[t] = pheromone level after iteration t
};

TraceSeries unpack_onemax_trace(const FitnessFunction& f, const RunTrace& trace) {
    if (f.weights().size() != f.n())
        throw std::invalid_argument("drift check: unit weights required");
    for (double wv : f.weights())
        if (wv != 1.0)
            throw std::invalid_argument("drift check: unit weights required");
    if (trace.snapshots.size() != trace.rows.size() + 1)
        throw std::invalid_argument("drift check: trace recorded without snapshots");
    TraceSeries s;
    s.T = trace.rows.size();
    s.w.resize(s.T + 1);
    s.ones.resize(s.T + 1);
    s.lvl.resize(s.T + 1);
    s.w[0] = wps(f.weights(), trace.snapshots[0]);
    s.ones[0] = 0;
    s.lvl[0] = pheromone_level_value(f, s.w[0]);
    for (std::size_t t = 1; t <= s.T; ++t) {
        const TraceRow& r = trace.rows[t - 1];
        s.w[t] = r.wps;
        s.ones[t] = r.fitness_level;
        s.lvl[t] = r.pheromone_level;
    }
    return s;
}

void push_witness(DriftReport& rep, const DriftWitness& w) {
    if (rep.witnesses.size() < kMaxWitnesses) rep.witnesses.push_back(w);
}

}  // namespace

DriftReport drift_check_onemax(const FitnessFunction& f, const RunTrace& trace,
                               double rho, double tol) {
    const TraceSeries s = unpack_onemax_trace(f, trace);
    DriftReport rep;

    // one step
    for (std::size_t t = 1; t <= s.T; ++t) {
        const int j = s.ones[t];
        const int i = s.lvl[t - 1];
        if (i >= j) continue;
        ++rep.one_step_checked;
        const double fb = s.w[t - 1];
        const double fa = s.w[t];
        const bool escaped = fa >= v_prefix(f, i + 1) - tol;
        const double ai = alpha_prefix(f, i);
        const double rhs = ai + (fb - ai) * (1.0 - rho) + (j - i) * rho;
        if (!escaped && fa < rhs - tol) {
            ++rep.one_step_violations;
            push_witness(rep, {DriftCheckKind::one_step, t, i, j, fa, rhs, false});
        }
    }

    // windowed: every start, every horizon until the premise dies
    std::vector<double> decay(s.T + 1);
    decay[0] = 1.0;
    for (std::size_t t = 1; t <= s.T; ++t) decay[t] = decay[t - 1] * (1.0 - rho);
    for (std::size_t t0 = 0; t0 < s.T; ++t0) {
        const int i = s.lvl[t0];
        if (i >= static_cast<int>(f.n())) continue;  // no level left to reach
        const double ai = alpha_prefix(f, i);
        const double vi1 = v_prefix(f, i + 1);
        int jmin = std::numeric_limits<int>::max();
        for (std::size_t t = 1; t0 + t <= s.T; ++t) {
            jmin = std::min(jmin, s.ones[t0 + t]);
            if (jmin <= i) break;
            ++rep.multi_step_checked;
            const double ft = s.w[t0 + t];
            if (ft >= vi1 - tol) continue;
            const double rhs = (jmin - i) * (1.0 - decay[t]);
            if (ft - ai < rhs - tol) {
                ++rep.multi_step_violations;
                push_witness(rep, {DriftCheckKind::multi_step, t0 + t, i, jmin, ft - ai, rhs, false});
            }
        }
    }

    // conditioned no-decrease
    for (std::size_t t = 1; t <= s.T; ++t) {
        const int m = std::min(s.lvl[t - 1], s.ones[t] - 1);
        if (m < 0) continue;
        ++rep.no_decrease_checked;
        const double vm = v_prefix(f, m);
        if (s.w[t] < vm - tol) {
            ++rep.no_decrease_violations;
            push_witness(rep, {DriftCheckKind::no_decrease, t, m, s.ones[t], s.w[t], vm, false});
        }
    }
    return rep;
}

void write_witness_csv(const std::vector<DriftWitness>& witnesses, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("witness csv: cannot open " + path);
    out << "iteration,i,j,lhs,rhs,escaped\n";
    char buf[160];
    for (const auto& w : witnesses) {
        std::snprintf(buf, sizeof buf, "%llu,%d,%d,%.17g,%.17g,%d\n",
                      static_cast<unsigned long long>(w.iteration), w.i, w.j, w.lhs, w.rhs,
                      w.escaped ? 1 : 0);
        out << buf;
    }
    if (!out.good()) throw std::runtime_error("witness csv: write failed for " + path);
}

SaturationReport saturation_check(const FitnessFunction& f, const RunTrace& trace,
                                  double rho, double tol) {
    const std::size_t T = trace.rows.size();
    const std::size_t k = static_cast<std::size_t>(freezing_bound(f.n(), rho));
    SaturationReport rep;
    if (k == 0 || T < k) return rep;
    const double cap = 1.0 - 1.0 / static_cast<double>(f.n());
    for (std::size_t t0 = 0; t0 + k <= T; ++t0) {
        int i = trace.rows[t0].fitness_level;
        for (std::size_t t = t0 + 1; t < t0 + k; ++t)
            i = std::min(i, trace.rows[t].fitness_level);
        const TraceRow& end = trace.rows[t0 + k - 1];
        ++rep.windows_checked;
        if (end.pheromone_level < i) {
            ++rep.violations;
            const double deficit = v_prefix(f, i) - end.wps;
            if (deficit > rep.worst_deficit) rep.worst_deficit = deficit;
            if (rep.violations == 1) {
                rep.first_violation_start = trace.rows[t0].iteration;
                rep.first_violation_needed = i;
                rep.first_violation_got = end.pheromone_level;
            }
        }
        if (end.wps < cap * f.sorted_prefix()[static_cast<std::size_t>(i)] - tol)
            ++rep.proof_violations;
    }
    return rep;
}

// ---- layers ----

static std::vector<double> layer_thresholds(std::size_t n, double rho, int ell) {
    std::vector<double> thr(n);
    const double hi = 1.0 - 1.0 / static_cast<double>(n);
    for (std::size_t j = 1; j <= n; ++j)
        thr[j - 1] =
            std::min(hi, 1.0 - std::pow(1.0 - rho, static_cast<double>(j) * ell));
    return thr;
}

// tau ascending: the j-th smallest value must clear thr[j-1].
static int layer_index_thr(const std::vector<double>& tau_ascending,
                           const std::vector<double>& thr) {
    for (std::size_t j = 0; j < tau_ascending.size(); ++j)
        if (tau_ascending[j] < thr[j] - kLevelSlack) return static_cast<int>(j);
    return static_cast<int>(tau_ascending.size());
}

int layer_index(const std::vector<double>& tau, double rho, int ell) {
    if (ell < 1) throw std::invalid_argument("layer_check: ell must be >= 1");
    std::vector<double> asc = tau;
    std::sort(asc.begin(), asc.end());
    return layer_index_thr(asc, layer_thresholds(tau.size(), rho, ell));
}

int layer_index(const PheromoneState& s, int ell) {
    return layer_index(s.values(), s.rho(), ell);
}

LayerWatcher::LayerWatcher(double rho, int ell) : rho_(rho), ell_(ell) {}

double LayerWatcher::rediscovery_rate() const {
    return iterations_ ? static_cast<double>(rediscoveries_) / static_cast<double>(iterations_)
                       : 0.0;
}

void LayerWatcher::on_iteration(const View& v) {
    ++iterations_;
    bool redisc = true;
    for (std::size_t j = 0; j < prev_lo_; ++j) {
        if (!v.sampled[j]) {
            redisc = false;
            break;
        }
    }
    if (redisc) ++rediscoveries_;
    std::size_t lo = 0;
    while (lo < v.best.size() && v.best[lo]) ++lo;
    prev_lo_ = lo;
    if (thresholds_.empty()) thresholds_ = layer_thresholds(v.best.size(), rho_, ell_);
    std::vector<double> asc = v.state.values();
    std::sort(asc.begin(), asc.end());
    last_layer_ = layer_index_thr(asc, thresholds_);
    min_layer_ = min_layer_ < 0 ? last_layer_ : std::min(min_layer_, last_layer_);
}

// ---- ones distribution and tail dominance ----

std::vector<double> exact_ones_distribution(const std::vector<double>& tau) {
    const std::size_t n = tau.size();
    if (n == 0) throw std::invalid_argument("ones distribution: empty tau");
    if (n > kOnesDistributionGuard)
        throw std::invalid_argument("ones distribution: n = " + std::to_string(n) +
                                    " above guard " + std::to_string(kOnesDistributionGuard));
    std::vector<double> p(n + 1, 0.0);
    p[0] = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = tau[i];
        for (std::size_t k = i + 1; k-- > 0;) p[k + 1] = p[k + 1] * (1.0 - t) + p[k] * t;
        p[0] *= 1.0 - t;
    }
    return p;
}

std::vector<double> exact_ones_distribution(const PheromoneState& s) {
    return exact_ones_distribution(s.values());
}

double ones_tail(const std::vector<double>& dist, int m) {
    if (m <= 0) return 1.0;
    double s = 0.0;
    for (std::size_t k = dist.size(); k-- > 0;) {
        if (static_cast<int>(k) < m) break;
        s += dist[k];
    }
    return s;
}

bool gleser_premise(const std::vector<double>& tau, const std::vector<double>& tau_prime) {
    if (tau.size() != tau_prime.size())
        throw std::invalid_argument("tail dominance: length mismatch");
    std::vector<double> a = tau, b = tau_prime;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double ca = 0.0, cb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ca += a[i];
        cb += b[i];
        if (ca < cb) return false;
    }
    return true;
}

GleserResult gleser_verify(const std::vector<double>& tau,
                           const std::vector<double>& tau_prime) {
    GleserResult r;
    r.premise = gleser_premise(tau, tau_prime);
    double lam = 0.0;
    for (double t : tau_prime) lam += t;
    r.lambda = lam;
    r.m = static_cast<int>(std::floor(lam + 1.0));
    r.p_tau = ones_tail(exact_ones_distribution(tau), r.m);
    r.p_tau_prime = ones_tail(exact_ones_distribution(tau_prime), r.m);
    // 1e-12 absorbs DP rounding only; observed counterexamples sit near 1e-3.
    r.holds = r.p_tau >= r.p_tau_prime - 1e-12;
    return r;
}

}  // namespace mmas

#include "mmas/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mmas/engine.hpp"
#include "mmas/harness.hpp"
#include "mmas/instruments.hpp"

namespace mmas {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitIo = 3;

Variant variant_from_flag(const std::string& s) {
    if (s == "mmas") return Variant::mmas;
    if (s == "mmas-star" || s == "mmas_star") return Variant::mmas_star;
    throw std::invalid_argument("unknown variant '" + s + "'");
}

// The per-run weight stream for random_linear; same derivation the harness
// uses, so `run` reproduces a harness replicate given its seed.
FitnessFunction make_function(const std::string& spec, std::size_t n, std::uint64_t seed) {
    if (spec == "onemax") return FitnessFunction::onemax(n);
    if (spec == "binval") return FitnessFunction::binval(n);
    if (spec == "leadingones") return FitnessFunction::leadingones(n);
    if (spec == "random_linear") {
        SplitMix64 wrng(SplitMix64::derive(seed, 0x5EED, 1));
        return FitnessFunction::random_linear(n, wrng);
    }
    if (spec.rfind("file:", 0) == 0) return FitnessFunction::from_weight_file(spec.substr(5));
    throw std::invalid_argument("unknown function spec '" + spec + "'");
}

// Streams trace rows straight to disk; memory stays flat however long the
// run is.
class CsvTraceStream : public RunObserver {
 public:
    CsvTraceStream(const FitnessFunction& f, const std::string& path) : f_(&f), out_(path) {
        if (!out_) throw std::runtime_error("trace: cannot open " + path);
        out_ << "iteration,best_fitness,wps,fitness_level,pheromone_level,accepted,replaced,"
                "saturated\n";
    }

    void on_iteration(const View& v) override {
        double w = 0.0;
        int pl = -1;
        int fl = 0;
        if (f_->is_linear()) {
            w = wps(*f_, v.state);
            pl = pheromone_level_value(*f_, w);
            fl = fitness_level(*f_, v.best);
        } else {
            fl = static_cast<int>(v.best_fitness);
        }
        out_ << v.iteration << ',' << format_double(v.best_fitness) << ',' << format_double(w)
             << ',' << fl << ',' << pl << ',' << (v.accepted ? 1 : 0) << ','
             << (v.replaced ? 1 : 0) << ',' << v.state.saturated_count() << '\n';
    }

    void close(const std::string& path) {
        out_.close();
        if (!out_.good()) throw std::runtime_error("trace: write failed for " + path);
    }

 private:
    const FitnessFunction* f_;
    std::ofstream out_;
};

std::string bits_to_string(const BitSolution& x) {
    std::string s(x.size(), '0');
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) s[i] = '1';
    return s;
}

// ---- run ----

struct RunFlags {
    std::string variant = "mmas";
    std::string function = "onemax";
    std::size_t n = 50;
    bool n_set = false;
    double rho = 0.1;
    std::uint64_t seed = 0;
    std::uint64_t max_iters = 100000000;
    std::string trace_path;
};

int cmd_run(const RunFlags& fl) {
    if (!(fl.rho > 0.0) || fl.rho > 1.0)
        throw std::invalid_argument("--rho must be in (0, 1]");
    std::size_t n = fl.n;
    FitnessFunction f = [&] {
        if (fl.function.rfind("file:", 0) == 0) {
            FitnessFunction g = make_function(fl.function, 0, fl.seed);
            if (fl.n_set && g.n() != n)
                throw std::invalid_argument("--n " + std::to_string(n) +
                                            " does not match weight file arity " +
                                            std::to_string(g.n()));
            n = g.n();
            return g;
        }
        return make_function(fl.function, n, fl.seed);
    }();

    AlgorithmConfig cfg;
    cfg.variant = variant_from_flag(fl.variant);
    cfg.n = n;
    cfg.rho = fl.rho;
    cfg.max_iterations = fl.max_iters;
    cfg.seed = fl.seed;

    std::optional<CsvTraceStream> tracer;
    if (!fl.trace_path.empty()) tracer.emplace(f, fl.trace_path);
    const RunResult r = run(cfg, f, tracer ? &*tracer : nullptr);
    if (tracer) tracer->close(fl.trace_path);

    std::cout << "variant: " << variant_name(cfg.variant) << "\n";
    std::cout << "function: " << f.name() << " (n = " << n << ")\n";
    std::cout << "rho: " << format_double(cfg.rho) << "\n";
    std::cout << "seed: " << cfg.seed << "\n";
    if (r.censored)
        std::cout << "optimization time: CENSORED after " << r.iterations_executed
                  << " iterations\n";
    else
        std::cout << "optimization time: " << r.optimization_time << "\n";
    if (n <= 64) std::cout << "best: " << bits_to_string(r.final_best) << "\n";
    std::cout << "best fitness: " << format_double(r.final_best_value) << "\n";
    return kExitOk;
}

// ---- sweep ----

struct SweepFlags {
    std::string plan_path;
    std::string function = "onemax";
    std::vector<std::string> variants;
    std::vector<std::size_t> n_values;
    std::vector<double> rho_values;
    std::string rho_inverse;
    std::size_t replicates = 0;
    std::uint64_t master_seed = 0;
    bool master_seed_set = false;
    std::uint64_t max_iters = 0;
    std::string random_linear_mode;
    std::string out_dir;
    unsigned parallel = 1;
};

ExperimentPlan plan_from_flags(const SweepFlags& fl) {
    // Reuse the plan-file grammar so inline flags and files cannot drift.
    std::string text;
    text += "function = " + fl.function + "\n";
    if (!fl.variants.empty()) {
        text += "variants = ";
        for (std::size_t i = 0; i < fl.variants.size(); ++i)
            text += (i ? ", " : "") + fl.variants[i];
        text += "\n";
    }
    if (!fl.n_values.empty()) {
        text += "n = ";
        for (std::size_t i = 0; i < fl.n_values.size(); ++i)
            text += (i ? ", " : "") + std::to_string(fl.n_values[i]);
        text += "\n";
    }
    if (!fl.rho_values.empty()) {
        text += "rho = ";
        for (std::size_t i = 0; i < fl.rho_values.size(); ++i)
            text += (i ? ", " : "") + format_double(fl.rho_values[i]);
        text += "\n";
    }
    if (!fl.rho_inverse.empty()) text += "rho_inverse = " + fl.rho_inverse + "\n";
    if (fl.replicates) text += "replicates = " + std::to_string(fl.replicates) + "\n";
    if (fl.master_seed_set) text += "master_seed = " + std::to_string(fl.master_seed) + "\n";
    if (fl.max_iters) text += "max_iterations = " + std::to_string(fl.max_iters) + "\n";
    if (!fl.random_linear_mode.empty())
        text += "random_linear_mode = " + fl.random_linear_mode + "\n";
    return parse_plan_text(text);
}

int cmd_sweep(const SweepFlags& fl) {
    const bool inline_given = !fl.variants.empty() || !fl.n_values.empty() ||
                              !fl.rho_values.empty() || !fl.rho_inverse.empty() ||
                              fl.replicates != 0;
    ExperimentPlan plan;
    if (!fl.plan_path.empty()) {
        if (inline_given)
            throw std::invalid_argument("use --plan or inline grid flags, not both");
        plan = parse_plan_file(fl.plan_path);
    } else {
        plan = plan_from_flags(fl);
    }

    std::string out_dir = fl.out_dir;
    if (out_dir.empty()) {
        const char* env = std::getenv("MMAS_OUT_DIR");
        out_dir = env && *env ? env : ".";
    }
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("sweep: cannot create directory " + out_dir);

    const std::vector<RunSummary> rows = execute(plan, fl.parallel);

    std::vector<std::string> created;
    try {
        for (Variant v : plan.variants) {
            std::vector<RunSummary> part;
            for (const auto& r : rows)
                if (r.variant == v) part.push_back(r);
            const std::string base =
                sanitize_component(plan.function_spec) + "_" + variant_name(v);
            const std::string csv = out_dir + "/" + base + ".csv";
            const std::string json = out_dir + "/" + base + ".json";
            write_summary_csv(part, csv);
            created.push_back(csv);
            write_summary_json(part, json);
            created.push_back(json);
        }
        const std::string manifest = out_dir + "/manifest.txt";
        {
            std::ofstream m(manifest);
            if (!m) throw std::runtime_error("sweep: cannot open " + manifest);
            m << "tool = " << kToolVersion << "\n" << plan_to_text(plan);
            if (!m.good()) throw std::runtime_error("sweep: write failed for " + manifest);
        }
        created.push_back(manifest);
    } catch (...) {
        // No partial output directory contents on failure.
        for (const auto& p : created) std::filesystem::remove(p);
        throw;
    }

    for (const auto& r : rows) {
        std::cout << r.function << " " << variant_name(r.variant) << " n=" << r.n
                  << " rho=" << format_double(r.rho) << ": mean=" << format_double(r.stats.mean)
                  << " stddev=" << format_double(r.stats.stddev)
                  << " median=" << format_double(r.stats.median) << " censored=" << r.censored
                  << "/" << r.replicates << "\n";
    }
    for (const auto& p : created) std::cout << "wrote " << p << "\n";
    return kExitOk;
}

// ---- verify ----

struct VerifyFlags {
    std::string suite;
    std::size_t n = 100;
    double rho = 0.1;
    std::uint64_t seed = 0;
    std::uint64_t iters = 20000;
};

bool deterministic_freeze(std::size_t n, double rho) {
    const std::uint64_t k = freezing_bound(n, rho);
    const double lo = 1.0 / static_cast<double>(n);
    const double hi = 1.0 - lo;
    bool ok = true;
    for (int pattern = 0; pattern < 3 && ok; ++pattern) {
        BitSolution target(n);
        for (std::size_t i = 0; i < n; ++i)
            target[i] = pattern == 0 ? 1 : pattern == 1 ? 0 : (i % 2 == 0);
        // Worst case: every pheromone starts at the border opposite its target.
        std::vector<double> start(n);
        for (std::size_t i = 0; i < n; ++i) start[i] = target[i] ? lo : hi;
        PheromoneState s(start, rho);
        for (std::uint64_t t = 0; t < k; ++t) s.update(target);
        for (std::size_t i = 0; i < n; ++i) {
            const double want = target[i] ? hi : lo;
            if (s.tau(i) != want) {
                std::cout << "  pattern " << pattern << " bit " << i << " stuck at "
                          << format_double(s.tau(i)) << " after " << k << " updates\n";
                ok = false;
            }
        }
    }
    return ok;
}

int cmd_verify(const VerifyFlags& fl) {
    const FitnessFunction onemax = FitnessFunction::onemax(fl.n);
    const Variant variants[2] = {Variant::mmas, Variant::mmas_star};
    bool ok = true;

    if (fl.suite == "freezing") {
        const std::uint64_t bound = freezing_bound(fl.n, fl.rho);
        std::cout << "freezing bound ceil(ln n / rho) = " << bound << "\n";
        const bool det = deterministic_freeze(fl.n, fl.rho);
        std::cout << "deterministic saturation from adversarial starts: "
                  << (det ? "PASS" : "FAIL") << "\n";
        ok = det;
        for (int vi = 0; vi < 2; ++vi) {
            FreezingTracker tracker(fl.n, fl.rho);
            AlgorithmConfig cfg;
            cfg.variant = variants[vi];
            cfg.n = fl.n;
            cfg.rho = fl.rho;
            cfg.max_iterations = fl.iters;
            cfg.seed = SplitMix64::derive(fl.seed, static_cast<std::uint64_t>(vi), 10);
            cfg.stop_at_optimum = false;
            run(cfg, onemax, &tracker);
            std::cout << variant_name(cfg.variant) << ": windows=" << tracker.window_count()
                      << " max_saturation_lag=" << tracker.max_saturation_lag()
                      << " violations=" << tracker.violation_count() << "\n";
            if (tracker.violation_count()) ok = false;
        }
    } else if (fl.suite == "drift" || fl.suite == "levels") {
        for (int vi = 0; vi < 2; ++vi) {
            AlgorithmConfig cfg;
            cfg.variant = variants[vi];
            cfg.n = fl.n;
            cfg.rho = fl.rho;
            cfg.max_iterations = fl.iters;
            cfg.seed = SplitMix64::derive(fl.seed, static_cast<std::uint64_t>(vi), 11);
            cfg.stop_at_optimum = false;
            cfg.record_trace = true;
            cfg.trace_snapshots = true;
            const RunResult rr = run(cfg, onemax);
            if (fl.suite == "drift") {
                const DriftReport rep = drift_check_onemax(onemax, rr.trace, fl.rho);
                std::cout << variant_name(cfg.variant) << ": one_step "
                          << rep.one_step_violations << "/" << rep.one_step_checked
                          << " multi_step " << rep.multi_step_violations << "/"
                          << rep.multi_step_checked << " no_decrease "
                          << rep.no_decrease_violations << "/" << rep.no_decrease_checked
                          << " violations\n";
                if (rep.total_violations()) {
                    ok = false;
                    const DriftWitness& w = rep.witnesses.front();
                    std::cout << "  first witness: iteration=" << w.iteration << " i=" << w.i
                              << " j=" << w.j << " lhs=" << format_double(w.lhs)
                              << " rhs=" << format_double(w.rhs)
                              << " escaped=" << (w.escaped ? 1 : 0) << "\n";
                }
            } else {
                const SaturationReport rep = saturation_check(onemax, rr.trace, fl.rho);
                std::cout << variant_name(cfg.variant) << ": windows=" << rep.windows_checked
                          << " violations=" << rep.violations
                          << " proof_form_violations=" << rep.proof_violations << "\n";
                if (rep.violations) {
                    ok = false;
                    std::cout << "  first: window start iteration=" << rep.first_violation_start
                              << " needed level " << rep.first_violation_needed << " got "
                              << rep.first_violation_got
                              << " worst deficit=" << format_double(rep.worst_deficit) << "\n";
                }
            }
        }
    } else if (fl.suite == "layers") {
        const FitnessFunction binval = FitnessFunction::binval(fl.n);
        const int ells[2] = {static_cast<int>(std::ceil(1.0 / fl.rho)),
                             static_cast<int>(std::ceil(5.0 / fl.rho))};
        for (int vi = 0; vi < 2; ++vi) {
            for (int ei = 0; ei < 2; ++ei) {
                LayerWatcher watcher(fl.rho, ells[ei]);
                AlgorithmConfig cfg;
                cfg.variant = variants[vi];
                cfg.n = fl.n;
                cfg.rho = fl.rho;
                cfg.max_iterations = fl.iters;
                cfg.seed = SplitMix64::derive(fl.seed, static_cast<std::uint64_t>(vi), 12);
                cfg.stop_at_optimum = false;
                run(cfg, binval, &watcher);
                const double reference =
                    std::exp(-5.0 / (static_cast<double>(ells[ei]) * fl.rho));
                std::cout << variant_name(cfg.variant) << " ell=" << ells[ei]
                          << ": rediscovery rate=" << format_double(watcher.rediscovery_rate())
                          << " (reference floor " << format_double(reference) << ")"
                          << " layer index min=" << watcher.min_layer_index()
                          << " last=" << watcher.last_layer_index() << "\n";
            }
        }
        // Report-only: the rediscovery bound is asymptotic, no threshold here.
    } else {
        throw std::invalid_argument("unknown suite '" + fl.suite + "'");
    }

    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kExitOk : kExitVerification;
}

// ---- oracle ----

struct OracleFlags {
    std::string check;
    std::size_t n = 10;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
};

// Independent of the DP: walks all 2^n strings.
std::vector<double> enumerate_ones_distribution(const std::vector<double>& tau) {
    const std::size_t n = tau.size();
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
    return acc;
}

int cmd_oracle(const OracleFlags& fl) {
    if (fl.n < 2 || fl.n > kOnesDistributionGuard)
        throw std::invalid_argument("--n must be in [2, " +
                                    std::to_string(kOnesDistributionGuard) + "]");
    SplitMix64 rng(fl.seed);

    if (fl.check == "gleser") {
        std::uint64_t tested = 0, counterexamples = 0, attempts = 0;
        const std::uint64_t max_attempts = fl.trials * 1000 + 1000000;
        GleserResult first;
        std::vector<double> first_tau, first_taup;
        while (tested < fl.trials && attempts < max_attempts) {
            ++attempts;
            std::vector<double> tau = random_tau(fl.n, rng);
            std::vector<double> taup = random_tau(fl.n, rng);
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
        std::cout << "premise pairs tested: " << tested << "\n";
        std::cout << "counterexamples: " << counterexamples << "\n";
        if (counterexamples) {
            std::cout << "first counterexample: lambda=" << format_double(first.lambda)
                      << " m=" << first.m << " P(ones(tau) >= m)=" << format_double(first.p_tau)
                      << " P(ones(tau') >= m)=" << format_double(first.p_tau_prime) << "\n";
            std::cout << "  tau  =";
            for (double t : first_tau) std::cout << " " << format_double(t);
            std::cout << "\n  tau' =";
            for (double t : first_taup) std::cout << " " << format_double(t);
            std::cout << "\nFAIL\n";
            return kExitVerification;
        }
        std::cout << "PASS\n";
        return kExitOk;
    }

    if (fl.check == "distribution") {
        if (fl.n > 20)
            throw std::invalid_argument(
                "--n above 20 makes the 2^n enumeration cross-check infeasible");
        double worst = 0.0;
        double worst_sum = 0.0;
        for (std::uint64_t t = 0; t < fl.trials; ++t) {
            const std::vector<double> tau = random_tau(fl.n, rng);
            const std::vector<double> dp = exact_ones_distribution(tau);
            const std::vector<double> en = enumerate_ones_distribution(tau);
            double sum = 0.0;
            for (std::size_t k = 0; k < dp.size(); ++k) {
                worst = std::max(worst, std::abs(dp[k] - en[k]));
                sum += dp[k];
            }
            worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
        }
        std::cout << "trials: " << fl.trials << "\n";
        std::cout << "max |dp - enumeration|: " << format_double(worst) << "\n";
        std::cout << "max |sum - 1|: " << format_double(worst_sum) << "\n";
        const bool ok = worst <= 1e-12 && worst_sum <= 1e-12;
        std::cout << (ok ? "PASS" : "FAIL") << "\n";
        return ok ? kExitOk : kExitVerification;
    }

    throw std::invalid_argument("unknown check '" + fl.check + "'");
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Simplified MAX-MIN ant system simulator, verification toolkit and "
                 "experiment harness for linear pseudo-Boolean functions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    RunFlags rf;
    auto* run_cmd = app.add_subcommand("run", "Single run of MMAS or MMAS*");
    run_cmd->add_option("--variant", rf.variant, "algorithm variant")
        ->check(CLI::IsMember({"mmas", "mmas-star"}))
        ->capture_default_str();
    run_cmd->add_option("--function", rf.function,
                        "onemax|binval|leadingones|random_linear|file:<path>")
        ->capture_default_str();
    auto* run_n = run_cmd->add_option("--n", rf.n, "problem size (>= 2)");
    run_n->capture_default_str();
    run_cmd->add_option("--rho", rf.rho, "evaporation rate in (0, 1]")->capture_default_str();
    run_cmd->add_option("--seed", rf.seed, "run seed")->capture_default_str();
    run_cmd->add_option("--max-iters", rf.max_iters, "iteration cap (censoring)")
        ->capture_default_str();
    run_cmd->add_option("--trace", rf.trace_path, "write per-iteration trace CSV here");

    SweepFlags sf;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run an experiment grid and emit CSV/JSON");
    sweep_cmd->add_option("--plan", sf.plan_path, "plan file (excludes inline grid flags)");
    sweep_cmd->add_option("--function", sf.function,
                          "onemax|binval|leadingones|random_linear|file:<path>")
        ->capture_default_str();
    sweep_cmd->add_option("--variant", sf.variants, "variant list: mmas, mmas-star");
    sweep_cmd->add_option("--n", sf.n_values, "n grid values");
    sweep_cmd->add_option("--rho", sf.rho_values, "rho grid values");
    sweep_cmd->add_option("--rho-inverse", sf.rho_inverse,
                          "rho = 1/x for x in from:to:step (excludes --rho)");
    sweep_cmd->add_option("--replicates", sf.replicates, "replicates per grid point");
    sweep_cmd->add_option("--master-seed", sf.master_seed, "master seed for stream derivation")
        ->capture_default_str();
    sweep_cmd->add_option("--max-iters", sf.max_iters, "iteration cap per run");
    sweep_cmd
        ->add_option("--random-linear-mode", sf.random_linear_mode,
                     "per_run or fixed_instance")
        ->check(CLI::IsMember({"per_run", "fixed_instance"}));
    sweep_cmd->add_option("--out", sf.out_dir,
                          "output directory (default: $MMAS_OUT_DIR, else .)");
    sweep_cmd->add_option("--parallel", sf.parallel, "worker thread count")
        ->capture_default_str();

    VerifyFlags vf;
    auto* verify_cmd =
        app.add_subcommand("verify", "Run a lemma checker suite over fresh runs");
    verify_cmd->add_option("--suite", vf.suite, "freezing|drift|levels|layers")
        ->required()
        ->check(CLI::IsMember({"freezing", "drift", "levels", "layers"}));
    verify_cmd->add_option("--n", vf.n, "problem size")->capture_default_str();
    verify_cmd->add_option("--rho", vf.rho, "evaporation rate")->capture_default_str();
    verify_cmd->add_option("--seed", vf.seed, "seed")->capture_default_str();
    verify_cmd->add_option("--iters", vf.iters, "iterations per checked run")
        ->capture_default_str();

    OracleFlags of;
    auto* oracle_cmd =
        app.add_subcommand("oracle", "Randomized cross-validation of the exact DP oracle");
    oracle_cmd->add_option("--check", of.check, "gleser|distribution")
        ->required()
        ->check(CLI::IsMember({"gleser", "distribution"}));
    oracle_cmd->add_option("--n", of.n, "vector length (<= 30; distribution check <= 20)")
        ->capture_default_str();
    oracle_cmd->add_option("--trials", of.trials, "number of random trials")
        ->capture_default_str();
    oracle_cmd->add_option("--seed", of.seed, "seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    rf.n_set = run_n->count() > 0;
    sf.master_seed_set = sweep_cmd->count("--master-seed") > 0;

    try {
        if (*run_cmd) return cmd_run(rf);
        if (*sweep_cmd) return cmd_sweep(sf);
        if (*verify_cmd) return cmd_verify(vf);
        if (*oracle_cmd) return cmd_oracle(of);
    } catch (const PlanError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}

int cli_main(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("mmas");
    for (const auto& a : args) argv.push_back(a.c_str());
    return cli_main(static_cast<int>(argv.size()), argv.data());
}

}  // namespace mmas

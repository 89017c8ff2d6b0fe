#include "mmas/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "mmas/instruments.hpp"

namespace mmas {

// ---- plan parsing ----

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

[[noreturn]] void plan_error(const std::string& key, const std::string& what) {
    throw PlanError("plan: key '" + key + "': " + what);
}

double parse_double(const std::string& key, const std::string& s) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) plan_error(key, "trailing junk in '" + s + "'");
        return v;
    } catch (const std::invalid_argument&) {
        plan_error(key, "not a number: '" + s + "'");
    } catch (const std::out_of_range&) {
        plan_error(key, "out of range: '" + s + "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& s) {
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(s, &used);
        if (used != s.size()) plan_error(key, "trailing junk in '" + s + "'");
        return v;
    } catch (const std::invalid_argument&) {
        plan_error(key, "not an integer: '" + s + "'");
    } catch (const std::out_of_range&) {
        plan_error(key, "out of range: '" + s + "'");
    }
}

Variant parse_variant(const std::string& key, const std::string& s) {
    if (s == "mmas") return Variant::mmas;
    if (s == "mmas-star" || s == "mmas_star") return Variant::mmas_star;
    plan_error(key, "unknown variant '" + s + "'");
}

}  // namespace

ExperimentPlan parse_plan_text(const std::string& text) {
    ExperimentPlan plan;
    bool saw_rho = false, saw_rho_inverse = false;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw PlanError("plan: line without '=': '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (val.empty()) plan_error(key, "empty value");

        if (key == "function") {
            plan.function_spec = val;
        } else if (key == "variants" || key == "variant") {
            plan.variants.clear();
            for (const auto& v : split_list(val)) plan.variants.push_back(parse_variant(key, v));
        } else if (key == "n") {
            plan.n_values.clear();
            for (const auto& v : split_list(val))
                plan.n_values.push_back(static_cast<std::size_t>(parse_u64(key, v)));
        } else if (key == "rho") {
            if (saw_rho_inverse) plan_error(key, "rho and rho_inverse are exclusive");
            saw_rho = true;
            plan.rho_values.clear();
            for (const auto& v : split_list(val)) plan.rho_values.push_back(parse_double(key, v));
        } else if (key == "rho_inverse") {
            if (saw_rho) plan_error(key, "rho and rho_inverse are exclusive");
            saw_rho_inverse = true;
            // from:to:step over x, rho = 1/x
            const auto parts = [&] {
                std::vector<std::string> p;
                std::stringstream ps(val);
                std::string item;
                while (std::getline(ps, item, ':')) p.push_back(trim(item));
                return p;
            }();
            if (parts.size() != 3) plan_error(key, "expected from:to:step");
            const std::uint64_t from = parse_u64(key, parts[0]);
            const std::uint64_t to = parse_u64(key, parts[1]);
            const std::uint64_t step = parse_u64(key, parts[2]);
            if (from == 0 || step == 0 || to < from) plan_error(key, "bad progression");
            plan.rho_values.clear();
            for (std::uint64_t x = from; x <= to; x += step)
                plan.rho_values.push_back(1.0 / static_cast<double>(x));
        } else if (key == "replicates") {
            plan.replicates = static_cast<std::size_t>(parse_u64(key, val));
        } else if (key == "master_seed") {
            plan.master_seed = parse_u64(key, val);
        } else if (key == "max_iterations") {
            plan.max_iterations = parse_u64(key, val);
        } else if (key == "random_linear_mode") {
            if (val == "per_run")
                plan.random_linear_mode = RandomLinearMode::per_run;
            else if (val == "fixed_instance")
                plan.random_linear_mode = RandomLinearMode::fixed_instance;
            else
                plan_error(key, "expected per_run or fixed_instance");
        } else {
            throw PlanError("plan: unknown key '" + key + "'");
        }
    }
    validate_plan(plan);
    return plan;
}

ExperimentPlan parse_plan_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PlanError("plan: cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_plan_text(buf.str());
}

void validate_plan(const ExperimentPlan& plan) {
    if (plan.function_spec.empty()) throw PlanError("plan: key 'function': empty");
    if (plan.variants.empty()) throw PlanError("plan: key 'variants': empty list");
    if (plan.n_values.empty()) throw PlanError("plan: key 'n': empty list");
    if (plan.rho_values.empty()) throw PlanError("plan: key 'rho': empty list");
    for (std::size_t n : plan.n_values)
        if (n < 2) throw PlanError("plan: key 'n': need n >= 2");
    for (double r : plan.rho_values)
        if (!(r > 0.0) || r > 1.0) throw PlanError("plan: key 'rho': need rho in (0, 1]");
    if (plan.replicates == 0) throw PlanError("plan: key 'replicates': must be positive");
    if (plan.max_iterations == 0)
        throw PlanError("plan: key 'max_iterations': must be positive");
    const std::string& fs = plan.function_spec;
    const bool known = fs == "onemax" || fs == "binval" || fs == "leadingones" ||
                       fs == "random_linear" || fs.rfind("file:", 0) == 0;
    if (!known) throw PlanError("plan: key 'function': unknown spec '" + fs + "'");
}

std::string plan_to_text(const ExperimentPlan& plan) {
    std::ostringstream out;
    out << "function = " << plan.function_spec << "\n";
    out << "variants = ";
    for (std::size_t i = 0; i < plan.variants.size(); ++i)
        out << (i ? ", " : "") << variant_name(plan.variants[i]);
    out << "\nn = ";
    for (std::size_t i = 0; i < plan.n_values.size(); ++i)
        out << (i ? ", " : "") << plan.n_values[i];
    out << "\nrho = ";
    for (std::size_t i = 0; i < plan.rho_values.size(); ++i)
        out << (i ? ", " : "") << format_double(plan.rho_values[i]);
    out << "\nreplicates = " << plan.replicates;
    out << "\nmaster_seed = " << plan.master_seed;
    out << "\nmax_iterations = " << plan.max_iterations;
    out << "\nrandom_linear_mode = "
        << (plan.random_linear_mode == RandomLinearMode::per_run ? "per_run" : "fixed_instance");
    out << "\n";
    return out.str();
}

// ---- execution ----

namespace {

struct GridPoint {
    Variant variant;
    std::size_t n;
    double rho;
};

}  // namespace

std::vector<RunSummary> execute(const ExperimentPlan& plan, unsigned parallelism) {
    validate_plan(plan);
    if (parallelism == 0) throw std::invalid_argument("execute: parallelism must be >= 1");

    std::vector<GridPoint> grid;
    for (Variant v : plan.variants)
        for (std::size_t n : plan.n_values)
            for (double rho : plan.rho_values) grid.push_back({v, n, rho});

    const std::string& fs = plan.function_spec;
    const bool is_random_linear = fs == "random_linear";

    // Shared instances for every non-random function; one per grid point for
    // fixed_instance random weights.
    std::vector<FitnessFunction> fixed;
    fixed.reserve(grid.size());
    for (std::size_t g = 0; g < grid.size(); ++g) {
        const std::size_t n = grid[g].n;
        if (fs == "onemax") {
            fixed.push_back(FitnessFunction::onemax(n));
        } else if (fs == "binval") {
            fixed.push_back(FitnessFunction::binval(n));
        } else if (fs == "leadingones") {
            fixed.push_back(FitnessFunction::leadingones(n));
        } else if (fs.rfind("file:", 0) == 0) {
            FitnessFunction f = FitnessFunction::from_weight_file(fs.substr(5));
            if (f.n() != n)
                throw PlanError("plan: weight file arity " + std::to_string(f.n()) +
                                " != n " + std::to_string(n));
            fixed.push_back(std::move(f));
        } else if (plan.random_linear_mode == RandomLinearMode::fixed_instance) {
            SplitMix64 wrng(SplitMix64::derive(plan.master_seed, g, ~std::uint64_t{0}));
            fixed.push_back(FitnessFunction::random_linear(n, wrng));
        } else {
            fixed.push_back(FitnessFunction::onemax(n));  // placeholder, unused per_run
        }
    }

    struct TaskOut {
        bool censored = true;
        double time = 0.0;
    };
    const std::size_t tasks = grid.size() * plan.replicates;
    std::vector<TaskOut> results(tasks);

    std::mutex err_mu;
    std::exception_ptr first_error;

    auto worker = [&](unsigned tid) {
        try {
            for (std::size_t id = tid; id < tasks; id += parallelism) {
                const std::size_t g = id / plan.replicates;
                const std::size_t r = id % plan.replicates;
                const GridPoint& gp = grid[g];
                const std::uint64_t seed = SplitMix64::derive(plan.master_seed, g, r);

                AlgorithmConfig cfg;
                cfg.variant = gp.variant;
                cfg.n = gp.n;
                cfg.rho = gp.rho;
                cfg.max_iterations = plan.max_iterations;
                cfg.seed = seed;

                RunResult rr;
                if (is_random_linear && plan.random_linear_mode == RandomLinearMode::per_run) {
                    SplitMix64 wrng(SplitMix64::derive(seed, 0x5EED, 1));
                    const FitnessFunction f = FitnessFunction::random_linear(gp.n, wrng);
                    rr = run(cfg, f);
                } else {
                    rr = run(cfg, fixed[g]);
                }
                results[id].censored = rr.censored;
                results[id].time = static_cast<double>(rr.optimization_time);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mu);
            if (!first_error) first_error = std::current_exception();
        }
    };

    if (parallelism == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(parallelism);
        for (unsigned t = 0; t < parallelism; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    std::vector<RunSummary> rows;
    rows.reserve(grid.size());
    for (std::size_t g = 0; g < grid.size(); ++g) {
        RunSummary s;
        s.function = fs;
        s.variant = grid[g].variant;
        s.n = grid[g].n;
        s.rho = grid[g].rho;
        s.replicates = plan.replicates;
        s.master_seed = plan.master_seed;
        std::vector<double> times;
        times.reserve(plan.replicates);
        for (std::size_t r = 0; r < plan.replicates; ++r) {
            const TaskOut& t = results[g * plan.replicates + r];
            if (t.censored)
                ++s.censored;
            else
                times.push_back(t.time);
        }
        s.stats = summarize(std::move(times));
        rows.push_back(std::move(s));
    }
    return rows;
}

RegressionFit regress_tail(const std::vector<RunSummary>& summaries, double inv_rho_lo,
                           double inv_rho_hi) {
    std::vector<double> x, y;
    for (const auto& s : summaries) {
        const double inv = 1.0 / s.rho;
        if (inv > inv_rho_lo && inv <= inv_rho_hi) {
            x.push_back(inv);
            y.push_back(s.stats.mean);
        }
    }
    if (x.size() < 3)
        throw std::invalid_argument("regress_tail: need >= 3 points in (" +
                                    format_double(inv_rho_lo) + ", " +
                                    format_double(inv_rho_hi) + "], got " +
                                    std::to_string(x.size()));
    const OlsFit f = ols_fit(x, y);
    RegressionFit fit;
    fit.slope = f.slope;
    fit.intercept = f.intercept;
    fit.r_squared = f.r_squared;
    fit.domain_lo = inv_rho_lo;
    fit.domain_hi = inv_rho_hi;
    fit.points = f.points;
    return fit;
}

// ---- output ----

std::string format_double(double x) {
    char buf[64];
    if (std::floor(x) == x && std::abs(x) < 9e15) {
        std::snprintf(buf, sizeof buf, "%.0f", x);
        return buf;
    }
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
}

std::string sanitize_component(const std::string& name) {
    std::string out = name;
    for (char& c : out) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '-' || c == '_';
        if (!ok) c = '_';
    }
    return out;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

void write_summary_csv(const std::vector<RunSummary>& summaries, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("emit: cannot open " + path);
    out << "function,variant,n,rho,replicates,censored,mean,stddev,median,min,max,seed\n";
    for (const auto& s : summaries) {
        out << csv_field(s.function) << ',' << variant_name(s.variant) << ',' << s.n << ','
            << format_double(s.rho) << ',' << s.replicates << ',' << s.censored << ','
            << format_double(s.stats.mean) << ',' << format_double(s.stats.stddev) << ','
            << format_double(s.stats.median) << ',' << format_double(s.stats.min) << ','
            << format_double(s.stats.max) << ',' << s.master_seed << "\n";
    }
    if (!out.good()) throw std::runtime_error("emit: write failed for " + path);
}

void write_summary_json(const std::vector<RunSummary>& summaries, const std::string& path) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : summaries) {
        arr.push_back({{"function", s.function},
                       {"variant", variant_name(s.variant)},
                       {"n", s.n},
                       {"rho", s.rho},
                       {"replicates", s.replicates},
                       {"censored", s.censored},
                       {"mean", s.stats.mean},
                       {"stddev", s.stats.stddev},
                       {"median", s.stats.median},
                       {"min", s.stats.min},
                       {"max", s.stats.max},
                       {"seed", s.master_seed}});
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("emit: cannot open " + path);
    out << arr.dump(2) << "\n";
    if (!out.good()) throw std::runtime_error("emit: write failed for " + path);
}

}  // namespace mmas

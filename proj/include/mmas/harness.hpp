#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mmas/engine.hpp"
#include "mmas/stats.hpp"

namespace mmas {

inline constexpr char kToolVersion[] = "mmas 1.0.0";

// Malformed or inconsistent experiment plans; a usage error, not an I/O one.
struct PlanError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class RandomLinearMode {
    per_run,         // fresh weights for every replicate
    fixed_instance,  // one weight draw per grid point, shared by replicates
};

// One sweep description. rho_values may be written explicitly or generated
// as 1/x over an arithmetic progression of x.
struct ExperimentPlan {
    std::string function_spec = "onemax";  // onemax|binval|leadingones|random_linear|file:<path>
    std::vector<Variant> variants{Variant::mmas};
    std::vector<std::size_t> n_values{50};
    std::vector<double> rho_values{0.1};
    std::size_t replicates = 100;
    std::uint64_t master_seed = 0;
    std::uint64_t max_iterations = 100000000;
    RandomLinearMode random_linear_mode = RandomLinearMode::per_run;
};

// Plan files are flat key=value lines; '#' starts a comment. Keys:
//   function, variants, n, rho, rho_inverse (from:to:step, exclusive with
//   rho), replicates, master_seed, max_iterations, random_linear_mode.
// List values are comma separated. Errors name the offending key.
ExperimentPlan parse_plan_text(const std::string& text);
ExperimentPlan parse_plan_file(const std::string& path);
// Normalized echo, itself parseable as a plan file.
std::string plan_to_text(const ExperimentPlan& plan);
void validate_plan(const ExperimentPlan& plan);

struct RunSummary {
    std::string function;
    Variant variant = Variant::mmas;
    std::size_t n = 0;
    double rho = 0.0;
    std::size_t replicates = 0;
    std::size_t censored = 0;
    SummaryStats stats;  // over uncensored optimization times only
    std::uint64_t master_seed = 0;
};

// Runs the whole grid (variants x n x rho, `replicates` runs each). Seeds
// derive from (master_seed, grid index, replicate index), so rows are a pure
// function of the plan and identical for every parallelism degree.
std::vector<RunSummary> execute(const ExperimentPlan& plan, unsigned parallelism = 1);

struct RegressionFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double domain_lo = 0.0;  // 1/rho interval (lo, hi]
    double domain_hi = 0.0;
    std::size_t points = 0;
};

// OLS of mean optimization time against 1/rho over summaries whose 1/rho
// lies in (lo, hi]. Needs >= 3 such points; rows should come from one
// (function, variant, n) slice.
RegressionFit regress_tail(const std::vector<RunSummary>& summaries, double inv_rho_lo,
                           double inv_rho_hi);

// CSV header: function,variant,n,rho,replicates,censored,mean,stddev,median,
// min,max,seed. RFC-4180 quoting; the JSON file mirrors the same fields.
void write_summary_csv(const std::vector<RunSummary>& summaries, const std::string& path);
void write_summary_json(const std::vector<RunSummary>& summaries, const std::string& path);

// Shortest decimal string that parses back to exactly x.
std::string format_double(double x);
// Filesystem-safe token for output file names.
std::string sanitize_component(const std::string& name);

}  // namespace mmas

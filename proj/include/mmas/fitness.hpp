#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mmas/pheromone.hpp"
#include "mmas/rng.hpp"

namespace mmas {

enum class FitnessKind {
    linear,        // explicit positive weights, float comparison
    binval,        // weights 2^(n-1-i), comparison is lexicographic on bits
    leading_ones,  // not linear; length of the all-ones prefix
};

// Evaluation result. `value` is the reporting number; for kinds whose float
// value can collide or lose precision (BinVal past 53 bits) `bits` carries
// the sampled string so comparisons stay exact.
struct FitnessValue {
    double value = 0.0;
    BitSolution bits;  // only filled for binval
};

// One fitness function instance: weights in user index order plus a
// canonical descending-sorted copy with the permutation between them.
// Maximization throughout; the unique optimum of every kind here is the
// all-ones string.
class FitnessFunction {
 public:
    static FitnessFunction onemax(std::size_t n);
    static FitnessFunction binval(std::size_t n);  // n <= 1024 so weights stay finite
    static FitnessFunction leadingones(std::size_t n);
    // Weights uniform on (0, 1]; consumes exactly n draws.
    static FitnessFunction random_linear(std::size_t n, SplitMix64& rng);
    static FitnessFunction linear(std::vector<double> weights, std::string name = "linear");
    // Whitespace-separated positive reals. Errors name the offending token.
    static FitnessFunction from_weight_file(const std::string& path);

    FitnessKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    std::size_t n() const { return n_; }
    bool is_linear() const { return kind_ != FitnessKind::leading_ones; }

    // User index order. For leadingones this is empty.
    const std::vector<double>& weights() const { return weights_; }
    // Descending copy and the map sorted position -> original index.
    const std::vector<double>& sorted_weights() const { return sorted_; }
    const std::vector<std::size_t>& sort_permutation() const { return perm_; }
    // Ascending prefix sums of sorted_weights: prefix[i] = sum of the i
    // largest weights, prefix[0] = 0.
    const std::vector<double>& sorted_prefix() const { return prefix_; }
    double total_weight() const { return total_; }

    FitnessValue evaluate(const BitSolution& x) const;

    // Three-way order of two solutions under this function: negative, zero,
    // positive for x < y, x == y, x > y. Exact for binval (lexicographic)
    // and leadingones (integer counts); float compare for general linear.
    int compare(const BitSolution& x, const BitSolution& y) const;
    int compare_values(const FitnessValue& a, const FitnessValue& b) const;

    bool is_optimal(const BitSolution& x) const;  // all-ones check, no floats
    double optimum_value() const { return optimum_; }

 private:
    FitnessFunction() = default;
    void finish_linear();  // builds sorted_/perm_/prefix_/total_

    FitnessKind kind_ = FitnessKind::linear;
    std::string name_;
    std::size_t n_ = 0;
    std::vector<double> weights_;
    std::vector<double> sorted_;
    std::vector<std::size_t> perm_;
    std::vector<double> prefix_;
    double total_ = 0.0;
    double optimum_ = 0.0;
};

}  // namespace mmas

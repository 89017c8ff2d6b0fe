#include "mmas/fitness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mmas {

void FitnessFunction::finish_linear() {
    n_ = weights_.size();
    perm_.resize(n_);
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    std::stable_sort(perm_.begin(), perm_.end(),
                     [&](std::size_t a, std::size_t b) { return weights_[a] > weights_[b]; });
    sorted_.resize(n_);
    for (std::size_t k = 0; k < n_; ++k) sorted_[k] = weights_[perm_[k]];
    prefix_.assign(n_ + 1, 0.0);
    for (std::size_t k = 0; k < n_; ++k) prefix_[k + 1] = prefix_[k] + sorted_[k];
    total_ = prefix_[n_];
    optimum_ = 0.0;
    for (double w : weights_) optimum_ += w;  // user order, same as evaluate(all-ones)
}

FitnessFunction FitnessFunction::onemax(std::size_t n) {
    FitnessFunction f = linear(std::vector<double>(n, 1.0), "onemax");
    return f;
}

FitnessFunction FitnessFunction::binval(std::size_t n) {
    if (n == 0) throw std::invalid_argument("binval: n must be positive");
    if (n > 1024) throw std::invalid_argument("binval: weights overflow past n = 1024");
    FitnessFunction f;
    f.kind_ = FitnessKind::binval;
    f.name_ = "binval";
    f.weights_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        f.weights_[i] = std::ldexp(1.0, static_cast<int>(n - 1 - i));
    f.finish_linear();
    return f;
}

FitnessFunction FitnessFunction::leadingones(std::size_t n) {
    if (n == 0) throw std::invalid_argument("leadingones: n must be positive");
    FitnessFunction f;
    f.kind_ = FitnessKind::leading_ones;
    f.name_ = "leadingones";
    f.n_ = n;
    f.optimum_ = static_cast<double>(n);
    return f;
}

FitnessFunction FitnessFunction::random_linear(std::size_t n, SplitMix64& rng) {
    std::vector<double> w(n);
    // 1 - u maps [0,1) onto (0,1]; zero weights cannot occur.
    for (std::size_t i = 0; i < n; ++i) w[i] = 1.0 - rng.next_double();
    return linear(std::move(w), "random_linear");
}

FitnessFunction FitnessFunction::linear(std::vector<double> weights, std::string name) {
    if (weights.empty()) throw std::invalid_argument("linear: no weights");
    for (double w : weights) {
        if (!(w > 0.0) || !std::isfinite(w))
            throw std::invalid_argument("linear: weights must be positive and finite");
    }
    FitnessFunction f;
    f.kind_ = FitnessKind::linear;
    f.name_ = std::move(name);
    f.weights_ = std::move(weights);
    f.finish_linear();
    return f;
}

FitnessFunction FitnessFunction::from_weight_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("weights: cannot open " + path);
    std::vector<double> w;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception&) {
            throw std::runtime_error("weights: unparsable token '" + tok + "' in " + path);
        }
        if (used != tok.size())
            throw std::runtime_error("weights: unparsable token '" + tok + "' in " + path);
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::runtime_error("weights: nonpositive weight '" + tok + "' in " + path);
        w.push_back(v);
    }
    if (w.empty()) throw std::runtime_error("weights: no values in " + path);
    return linear(std::move(w), "file:" + path);
}

FitnessValue FitnessFunction::evaluate(const BitSolution& x) const {
    if (x.size() != n_)
        throw std::invalid_argument("fitness: solution length " + std::to_string(x.size()) +
                                    " != n " + std::to_string(n_));
    FitnessValue out;
    if (kind_ == FitnessKind::leading_ones) {
        std::size_t c = 0;
        while (c < n_ && x[c]) ++c;
        out.value = static_cast<double>(c);
        return out;
    }
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        if (x[i]) s += weights_[i];  // index order
    out.value = s;
    if (kind_ == FitnessKind::binval) out.bits = x;
    return out;
}

static int cmp_double(double a, double b) { return a < b ? -1 : (a > b ? 1 : 0); }

static int cmp_lex(const BitSolution& x, const BitSolution& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) return x[i] ? 1 : -1;
    return 0;
}

int FitnessFunction::compare(const BitSolution& x, const BitSolution& y) const {
    switch (kind_) {
        case FitnessKind::binval:
            return cmp_lex(x, y);
        case FitnessKind::leading_ones:
            return cmp_double(evaluate(x).value, evaluate(y).value);
        case FitnessKind::linear:
        default:
            return cmp_double(evaluate(x).value, evaluate(y).value);
    }
}

int FitnessFunction::compare_values(const FitnessValue& a, const FitnessValue& b) const {
    if (kind_ == FitnessKind::binval) {
        if (a.bits.size() != n_ || b.bits.size() != n_)
            throw std::invalid_argument("fitness: binval values need their bit strings");
        return cmp_lex(a.bits, b.bits);
    }
    return cmp_double(a.value, b.value);
}

bool FitnessFunction::is_optimal(const BitSolution& x) const {
    if (x.size() != n_) return false;
    for (auto b : x)
        if (!b) return false;
    return true;
}

}  // namespace mmas

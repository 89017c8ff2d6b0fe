#pragma once

#include <cstddef>
#include <vector>

namespace mmas {

struct SummaryStats {
    std::size_t count = 0;
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation, 0 for count < 2
    double median = 0.0;
    double min = 0.0;
    double max = 0.0;
};

// Order statistics plus mean/stddev; the input is copied and sorted.
SummaryStats summarize(std::vector<double> values);

struct OlsFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::size_t points = 0;
};

// Least squares line through (x, y). Needs >= 2 points and nonconstant x.
// A perfect fit of constant y reports r_squared = 1.
OlsFit ols_fit(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace mmas

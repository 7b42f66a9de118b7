#pragma once

#include <cstdint>

namespace btg {

// Closed-form connectivity thresholds in the choice count c.
struct ThresholdFormulas {
    double c_upper = 0.0;      // sqrt((2 + eps) ln n / ln ln n)
    double c_lower = 0.0;      // sqrt((2 - eps) ln n / ln ln n)
    double lambda = 0.0;       // ln(n r^d) / ln ln n
    int c_lower_general = 0;   // floor(sqrt((1-eps) (lambda/(lambda-1/2)) ln n / ln(n r^d)))
};

// All three formulas at one (n, d, r, eps). Requires n >= 3 so that
// ln ln n > 0, and r inside the admissible range (lambda > 1/2).
ThresholdFormulas theoretical_thresholds(std::uint64_t n, int d, double r, double eps);

double c_upper_bound(std::uint64_t n, double eps);
double c_lower_bound(std::uint64_t n, double eps);

// The threshold scale sqrt(2 ln n / ln ln n).
double c_star_scale(std::uint64_t n);

// Choice count for the diameter regime: ceil(mu * sqrt(ln n)).
int diameter_choice_count(std::uint64_t n, double mu);

}  // namespace btg

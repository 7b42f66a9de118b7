#include "btgraph/thresholds.hpp"

#include <cmath>
#include <stdexcept>

namespace btg {

namespace {
double log_log(std::uint64_t n) {
    if (n < 3) throw std::invalid_argument("n-too-small: need n >= 3 so ln ln n > 0");
    return std::log(std::log(double(n)));
}
}  // namespace

double c_upper_bound(std::uint64_t n, double eps) {
    return std::sqrt((2.0 + eps) * std::log(double(n)) / log_log(n));
}

double c_lower_bound(std::uint64_t n, double eps) {
    return std::sqrt((2.0 - eps) * std::log(double(n)) / log_log(n));
}

double c_star_scale(std::uint64_t n) {
    return std::sqrt(2.0 * std::log(double(n)) / log_log(n));
}

int diameter_choice_count(std::uint64_t n, double mu) {
    if (n < 2) throw std::invalid_argument("n-too-small: need n >= 2");
    return static_cast<int>(std::ceil(mu * std::sqrt(std::log(double(n)))));
}

ThresholdFormulas theoretical_thresholds(std::uint64_t n, int d, double r, double eps) {
    if (d < 1) throw std::invalid_argument("invalid-dimension: d must be >= 1");
    if (!(eps > 0.0) || !(eps < 2.0)) throw std::invalid_argument("eps must lie in (0,2)");

    ThresholdFormulas f;
    f.c_upper = c_upper_bound(n, eps);
    f.c_lower = c_lower_bound(n, eps);

    const double ln_n = std::log(double(n));
    const double ln_nrd = std::log(double(n) * std::pow(r, d));
    f.lambda = ln_nrd / log_log(n);
    if (f.lambda <= 0.5)
        throw std::invalid_argument("r outside the admissible range: lambda <= 1/2");
    // (1-eps) <= 0 makes the general lower bound vacuous
    const double inner =
        std::max(0.0, (1.0 - eps) * (f.lambda / (f.lambda - 0.5)) * ln_n / ln_nrd);
    f.c_lower_general = static_cast<int>(std::floor(std::sqrt(inner)));
    return f;
}

}  // namespace btg

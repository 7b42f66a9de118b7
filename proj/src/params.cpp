#include "btgraph/params.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace btg {

double unit_ball_volume(int d) {
    if (d < 1) throw std::invalid_argument("invalid-dimension: d must be >= 1");
    return std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
}

double critical_gamma(int d) {
    return 1.0 / std::pow(unit_ball_volume(d), 1.0 / d);
}

double gamma_star_star(int d) {
    if (d < 1) throw std::invalid_argument("invalid-dimension: d must be >= 1");
    return 2.0 * std::pow(3.0, 1.0 / d);
}

Geometry derive_geometry(const ModelParams& params) {
    if (params.d < 1) throw std::invalid_argument("invalid-dimension: d must be >= 1");
    if (params.gamma.has_value() == params.r.has_value())
        throw std::invalid_argument("exactly one of {gamma, r} must be supplied");

    Geometry geo;
    if (params.gamma) {
        if (*params.gamma <= 0.0) throw std::invalid_argument("gamma must be > 0");
        if (params.n < 2) throw std::invalid_argument("radius-out-of-range: n too small for derived radius");
        const double scale = std::pow(std::log(double(params.n)) / double(params.n), 1.0 / params.d);
        geo.gamma = *params.gamma;
        geo.r = *params.gamma * scale;
    } else {
        geo.r = *params.r;
        if (params.n >= 2) {
            const double scale = std::pow(std::log(double(params.n)) / double(params.n), 1.0 / params.d);
            geo.gamma = geo.r / scale;
        } else {
            geo.gamma = 0.0;
        }
    }
    if (!(geo.r > 0.0) || !(geo.r < 1.0))
        throw std::invalid_argument("radius-out-of-range: need 0 < r < 1");

    const int k = static_cast<int>(std::floor(1.0 / geo.r));
    geo.coarse_cells_per_side = k;
    geo.ell_cells_per_side = 3 * k;
    geo.ell = 1.0 / (3.0 * k);
    return geo;
}

}  // namespace btg

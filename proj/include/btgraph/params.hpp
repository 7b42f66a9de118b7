#pragma once

#include <cstdint>
#include <optional>

namespace btg {

// Model parameters. Exactly one of {gamma, r} is supplied; the other is
// derived (see derive_geometry). All logarithms are natural.
struct ModelParams {
    std::uint64_t n = 0;
    int d = 2;
    std::optional<double> gamma;
    std::optional<double> r;
    int c = 1;
    std::uint64_t seed = 1;
    double eps = 0.1;
};

// Radius and grid quantities derived from ModelParams.
//   r         = gamma * (ln n / n)^(1/d)   (when gamma given)
//   ell       = (1/3) * floor(1/r)^-1
//   ell_cells = 3 * floor(1/r)   cells per side of the ell-tiling
// The 3*ell coarse tiling has floor(1/r) cells per side.
struct Geometry {
    double r = 0.0;
    double gamma = 0.0;
    double ell = 0.0;
    int ell_cells_per_side = 0;
    int coarse_cells_per_side = 0;
};

Geometry derive_geometry(const ModelParams& params);

// Lebesgue volume of the d-dimensional unit ball.
double unit_ball_volume(int d);

// Connectivity threshold multiplier of the underlying geometric graph:
// 1 / VolB(0,1)^(1/d).
double critical_gamma(int d);

// Default "safe" multiplier 2 * 3^(1/d); experiments may use any larger
// gamma.
double gamma_star_star(int d);

}  // namespace btg

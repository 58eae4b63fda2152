#pragma once

#include "tsbs/market.hpp"

namespace tsbs {

/// Log-price/time discretization. dx and dt are always derived, never stored.
struct GridSpec {
    double x_min = -10.0;
    double x_max = 10.0;
    int n_space = 100;   // space intervals; nodes 0..n_space
    int n_time = 100;    // time steps; levels 0..n_time
    double theta = 0.0;  // scheme weight, 0 = implicit, 1 = explicit

    double dx() const { return (x_max - x_min) / n_space; }
    double dt(double maturity) const { return maturity / n_time; }
    double x(int i) const { return x_min + i * dx(); }

    // Throws std::invalid_argument unless x_min < ln K < x_max,
    // x_min < ln Z0 < x_max, n >= 3, N >= 2, theta in [0,1].
    void validate(const MarketParams& m) const;
};

/// Translates the grid by less than one dx so that ln(spot) falls exactly on
/// a node; dx and the node counts are unchanged. Removes interpolation noise
/// when reading the price off the grid.
GridSpec align_to_spot(GridSpec grid, double spot);

}  // namespace tsbs

#include "tsbs/grid.hpp"

#include <cmath>

namespace tsbs {

void GridSpec::validate(const MarketParams& m) const {
    m.validate();
    if (!(x_min < x_max)) throw std::invalid_argument("grid: x_min must be < x_max");
    if (n_space < 3) throw std::invalid_argument("grid: need at least 3 space intervals");
    if (n_time < 2) throw std::invalid_argument("grid: need at least 2 time steps");
    if (!(theta >= 0.0 && theta <= 1.0)) throw std::invalid_argument("grid: theta must be in [0,1]");
    if (!(m.strike > 0.0)) throw std::invalid_argument("grid: finite-difference domain needs strike > 0");
    const double lk = std::log(m.strike);
    const double lz = std::log(m.spot);
    if (!(x_min < lk && lk < x_max)) throw std::invalid_argument("grid: ln(strike) outside (x_min, x_max)");
    if (!(x_min < lz && lz < x_max)) throw std::invalid_argument("grid: ln(spot) outside (x_min, x_max)");
}

GridSpec align_to_spot(GridSpec grid, double spot) {
    if (!(spot > 0.0)) throw std::invalid_argument("align_to_spot: spot must be > 0");
    const double lz = std::log(spot);
    const double h = grid.dx();
    const double offset = (lz - grid.x_min) / h;
    const double shift = (offset - std::round(offset)) * h;  // |shift| <= dx/2
    grid.x_min += shift;
    grid.x_max += shift;
    return grid;
}

}  // namespace tsbs

#pragma once

#include <stdexcept>

namespace tsbs {

/// Anomalous-diffusion inputs: exponent alpha of the inverse tempered stable
/// subordinator and tempering rate lambda (per unit time). lambda = 0 is the
/// pure subdiffusive limit; alpha outside (1e-6, 1 - 1e-9) is rejected as a
/// degenerate regime.
struct SubdiffusionParams {
    double alpha = 0.5;
    double lambda = 0.0;

    static constexpr double alpha_min = 1e-6;
    static constexpr double alpha_max = 1.0 - 1e-9;

    void validate() const {
        if (!(alpha > alpha_min && alpha < alpha_max))
            throw std::invalid_argument("subdiffusion: alpha outside supported (1e-6, 1 - 1e-9)");
        if (!(lambda >= 0.0))
            throw std::invalid_argument("subdiffusion: lambda must be >= 0");
    }
};

}  // namespace tsbs

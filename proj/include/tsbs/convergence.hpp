#pragma once

#include <vector>

#include "tsbs/solver.hpp"

namespace tsbs {

/// Self-convergence probe: errors of a refinement ladder against the
/// finest-grid solution in the discrete L2 norm, with log2 ratio estimates
/// of the observed order. A non-monotone error sequence is reported as
/// inconclusive rather than silently fitted.
struct OrderStudy {
    std::vector<int> ladder;       // refinement parameter per level
    std::vector<double> errors;    // ||u_level - u_ref||_dx at maturity
    std::vector<double> orders;    // log2(e_i / e_{i+1})
    double mean_order = 0.0;
    bool monotone = true;          // errors strictly decreasing along the ladder
};

/// Halve dt along `ladder` (e.g. {50,100,200,400}) at a fixed fine spatial
/// grid; the reference uses ref_factor x the largest N. The payoff is
/// smoothed with the fixed grid's dx so the initial data is identical across
/// the ladder.
OrderStudy temporal_order_study(const MarketParams& m, const SubdiffusionParams& sub, double theta,
                                double x_min, double x_max, int n_fine, std::vector<int> ladder,
                                int ref_factor = 8);

/// Halve dx along `ladder` (nested grids) at a fixed fine time step; each
/// solve smooths the payoff with its own dx. Errors are measured at the
/// coarse grid's nodes against the nested reference solution.
OrderStudy spatial_order_study(const MarketParams& m, const SubdiffusionParams& sub, double theta,
                               double x_min, double x_max, int N_fine, std::vector<int> ladder,
                               int ref_factor = 4);

/// Shared helper: orders and monotonicity from a ladder/error table.
OrderStudy summarize_orders(std::vector<int> ladder, std::vector<double> errors);

}  // namespace tsbs

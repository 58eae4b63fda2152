#pragma once

#include <string>

#include "tsbs/grid.hpp"
#include "tsbs/market.hpp"
#include "tsbs/memory_weights.hpp"
#include "tsbs/subdiffusion.hpp"

namespace tsbs {

enum class StabilityCondition {
    weighted_22,        // weighted-scheme stability inequality, any theta
    implicit_oby1,      // theta = 0 sufficient stability condition
    convergence_lemma,  // theta = 0 convergence condition
};

const char* condition_name(StabilityCondition c);

/// The stability inequality's max(...) expression admits two parenthesis
/// readings; `proof_grouping` (the default) takes max over the two squared
/// terms and then adds (b d theta/dx)^2, matching the expression used inside
/// the stability proof. `literal` adds it to the second square only. They
/// coincide for theta = 0.
enum class StabilityGrouping { proof_grouping, literal };

/// Evaluation of one analytic condition, always of the form lhs >= rhs.
struct ConditionReport {
    StabilityCondition condition = StabilityCondition::convergence_lemma;
    bool satisfied = false;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // lhs - rhs; satisfied iff margin >= 0
    // Parameter snapshot for serialization.
    double alpha = 0.0, lambda = 0.0, theta = 0.0, dt = 0.0, dx = 0.0;
    int steps = 0;
};

/// Weighted-scheme stability condition; sums run over the full N-step memory
/// in compensated arithmetic (margins near zero matter), O(N), N up to 1e6.
ConditionReport check_weighted_stability(const PdeCoefficients& coeffs,
                                         const SubdiffusionParams& sub, const GridSpec& grid,
                                         const MemoryWeights& w,
                                         StabilityGrouping reading = StabilityGrouping::proof_grouping);

/// theta = 0 conditions: the convergence condition
///   2 d (c - lambda^alpha) + 1 >= sum_j (b_j - b_{j+1}) e^{-lambda dt (j+1)}
/// or, under `implicit_oby1`, the stability condition
///   1 - d lambda^alpha >= sum_j (b_j - b_{j+1}) e^{-lambda dt (j+1)}.
ConditionReport check_implicit_condition(const SubdiffusionParams& sub, double discount, double dt,
                                         int steps,
                                         StabilityCondition which = StabilityCondition::convergence_lemma);

/// Time rescaling T* = beta T: alpha* = alpha, lambda* = lambda/beta,
/// r* = (1+r)^{1/beta} - 1, and sigma* = sigma/sqrt(beta) so that
/// sigma^2 T stays invariant (the last is this engine's extension; the
/// printed transformation covers alpha, lambda, r only). Requires r > 0.
std::pair<MarketParams, SubdiffusionParams> rescale_parameters(const MarketParams& m,
                                                               const SubdiffusionParams& sub,
                                                               double beta);

struct RescaleResult {
    double beta = 1.0;
    MarketParams market;
    SubdiffusionParams subdiffusion;
    ConditionReport report;
};

/// Halving search from beta = 1 for the largest beta whose rescaled
/// parameters satisfy the convergence condition. Throws std::runtime_error
/// below the 1e-9 search floor (cannot happen for r > 0 unless the inputs
/// are broken).
RescaleResult find_stabilizing_beta(const MarketParams& m, const SubdiffusionParams& sub,
                                    const GridSpec& grid);

/// theta with the smallest error bound under unconditional stability in the
/// untempered case: (2 - 2^{1-alpha}) / (3 - 2^{1-alpha}). Reported for user
/// guidance only.
double optimal_theta_subdiffusive(double alpha);

}  // namespace tsbs

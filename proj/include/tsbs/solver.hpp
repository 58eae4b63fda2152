#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tsbs/grid.hpp"
#include "tsbs/market.hpp"
#include "tsbs/memory_weights.hpp"
#include "tsbs/operators.hpp"
#include "tsbs/subdiffusion.hpp"

namespace tsbs {

/// The weighted scheme's first-step equation weights the constant history
/// term as theta*(1 - d lam^a e^{-lam dt}) while the generic step prints
/// theta*(1 - d lam^a) e^{-lam dt}; the two readings differ in whether the
/// tempering factor multiplies the whole theta term. `as_printed` keeps each
/// line exactly as published (line 1 for k=0, line 2 for k>=1);
/// `first_line_constant` applies the line-1 form at every step. They agree
/// for theta = 0 and for lambda = 0.
enum class StepReading { as_printed, first_line_constant };

struct SolverOptions {
    OptionKind kind = OptionKind::call;
    std::optional<double> smoothing_width;  // payoff smoothing; unset = raw payoff
    StepReading reading = StepReading::as_printed;
};

/// Grid function u_i^k for i = 0..n, k = 0..N, stored row-major by time
/// level. Row 0 is the (possibly smoothed) initial condition; columns 0 and n
/// carry the boundary functions at every level.
struct SolutionSurface {
    GridSpec grid;
    MarketParams market;
    SubdiffusionParams subdiffusion;
    OptionKind kind = OptionKind::call;
    std::vector<double> values;  // (N+1) x (n+1)
    bool weighted_diagonally_dominant = true;

    double at(int level, int node) const {
        return values[static_cast<size_t>(level) * (grid.n_space + 1) + node];
    }
    double x(int node) const { return grid.x(node); }
    double t(int level) const { return level * grid.dt(market.maturity); }
    double max_abs() const;
    bool finite() const;
    /// Discrete L2 norm over interior nodes of a time level.
    double interior_l2(int level) const;
};

/// Provider of the boundary vector G^k.
using BoundaryProvider = std::function<std::vector<double>(int level)>;

/// One transition of the weighted scheme: given interior levels u^0..u^k,
/// returns u^{k+1}. Exposed separately so tests can drive single steps.
std::vector<double> advance_level(const std::vector<std::vector<double>>& levels, int k,
                                  const SchemeOperators& ops, const MemoryWeights& w,
                                  const BoundaryProvider& boundary, double lambda, double dt,
                                  double theta, StepReading reading);

/// Full time march of the weighted scheme for the tempered fractional
/// pricing problem. History is kept in full (no short-memory truncation);
/// work is O(N^2 n).
SolutionSurface solve(const MarketParams& m, const SubdiffusionParams& sub, const GridSpec& grid,
                      const SolverOptions& options = {});

/// Value at maturity level for a given spot: exact node value when ln(spot)
/// lies on the grid, otherwise 4-point polynomial interpolation.
double price_at_spot(const SolutionSurface& surface, double spot);

/// Convenience: aligned grid, solve, read at spot. Puts are priced from the
/// call via put-call parity.
double fd_price(const MarketParams& m, const SubdiffusionParams& sub, GridSpec grid,
                OptionKind kind, const SolverOptions& options = {});

}  // namespace tsbs

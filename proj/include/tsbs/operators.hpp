#pragma once

#include <vector>

#include "tsbs/grid.hpp"
#include "tsbs/market.hpp"
#include "tsbs/memory_weights.hpp"
#include "tsbs/subdiffusion.hpp"

namespace tsbs {

/// Solver-side failure (singular pivot, non-finite values). Mapped to a
/// dedicated process exit code by the CLI.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Constant-coefficient tridiagonal operator on the interior nodes 1..n-1.
struct Tridiagonal {
    double lower = 0.0;  // entry (i, i-1)
    double diag = 0.0;   // entry (i, i)
    double upper = 0.0;  // entry (i, i+1)

    std::vector<double> apply(const std::vector<double>& v) const;
};

/// Thomas elimination, O(n). `context` names the offending parameter
/// combination if a pivot degenerates (a stability-gate violation symptom,
/// not a numerical bug).
std::vector<double> solve_tridiagonal(const Tridiagonal& m, const std::vector<double>& rhs,
                                      const char* context);

/// The three scheme operators: implicit A, explicit B = I - A, and the
/// weighted C = theta I + (1-theta) A, plus the boundary couplings that feed
/// the G vector.
struct SchemeOperators {
    Tridiagonal implicit_op;   // A
    Tridiagonal explicit_op;   // B
    Tridiagonal weighted_op;   // C
    double coupling_lower = 0.0;  // a d/dx^2 - b d/(2 dx), multiplies u_0^k
    double coupling_upper = 0.0;  // a d/dx^2 + b d/(2 dx), multiplies u_n^k
    double theta = 0.0;
    bool weighted_diagonally_dominant = true;
};

SchemeOperators assemble_operators(const PdeCoefficients& coeffs, const SubdiffusionParams& sub,
                                   const GridSpec& grid, const MemoryWeights& w);

/// Boundary data of the solved problem. For calls: u(x_min,t) = 0 and
/// u(x_max,t) = e^{x_max} e^{-d(T-t)} - K e^{-r(T-t)}; puts mirror it.
double lower_boundary_value(const MarketParams& m, OptionKind kind, const GridSpec& grid, double t);
double upper_boundary_value(const MarketParams& m, OptionKind kind, const GridSpec& grid, double t);

/// G^k: only the first and last interior entries are nonzero.
std::vector<double> boundary_vector(int level, const MarketParams& m, OptionKind kind,
                                    const PdeCoefficients& coeffs, const GridSpec& grid,
                                    const MemoryWeights& w);

}  // namespace tsbs

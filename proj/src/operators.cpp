#include "tsbs/operators.hpp"

#include <cmath>
#include <string>

namespace tsbs {

std::vector<double> Tridiagonal::apply(const std::vector<double>& v) const {
    const size_t n = v.size();
    std::vector<double> out(n);
    for (size_t i = 0; i < n; ++i) {
        double y = diag * v[i];
        if (i > 0) y += lower * v[i - 1];
        if (i + 1 < n) y += upper * v[i + 1];
        out[i] = y;
    }
    return out;
}

std::vector<double> solve_tridiagonal(const Tridiagonal& m, const std::vector<double>& rhs,
                                      const char* context) {
    const size_t n = rhs.size();
    std::vector<double> c(n), d(n), x(n);
    double pivot = m.diag;
    if (pivot == 0.0)
        throw NumericalError(std::string("singular tridiagonal system (zero pivot) in ") + context);
    c[0] = m.upper / pivot;
    d[0] = rhs[0] / pivot;
    for (size_t i = 1; i < n; ++i) {
        pivot = m.diag - m.lower * c[i - 1];
        if (pivot == 0.0 || !std::isfinite(pivot))
            throw NumericalError(std::string("singular tridiagonal system (degenerate pivot) in ") +
                                 context);
        c[i] = m.upper / pivot;
        d[i] = (rhs[i] - m.lower * d[i - 1]) / pivot;
    }
    x[n - 1] = d[n - 1];
    for (size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
    return x;
}

SchemeOperators assemble_operators(const PdeCoefficients& coeffs, const SubdiffusionParams& sub,
                                   const GridSpec& grid, const MemoryWeights& w) {
    sub.validate();
    const double dx = grid.dx();
    const double d = w.scale;
    const double a = coeffs.diffusion;
    const double b = coeffs.drift;
    const double c = coeffs.discount;
    const double lam_a = std::pow(sub.lambda, sub.alpha);

    SchemeOperators ops;
    ops.theta = grid.theta;
    ops.coupling_lower = a * d / (dx * dx) - b * d / (2.0 * dx);
    ops.coupling_upper = a * d / (dx * dx) + b * d / (2.0 * dx);

    ops.implicit_op.diag = 1.0 + 2.0 * a * d / (dx * dx) + c * d - lam_a * d;
    ops.implicit_op.lower = -ops.coupling_lower;
    ops.implicit_op.upper = -ops.coupling_upper;

    ops.explicit_op.diag = 1.0 - ops.implicit_op.diag;  // B = I - A
    ops.explicit_op.lower = -ops.implicit_op.lower;
    ops.explicit_op.upper = -ops.implicit_op.upper;

    const double theta = grid.theta;
    ops.weighted_op.diag = theta + (1.0 - theta) * ops.implicit_op.diag;
    ops.weighted_op.lower = (1.0 - theta) * ops.implicit_op.lower;
    ops.weighted_op.upper = (1.0 - theta) * ops.implicit_op.upper;

    ops.weighted_diagonally_dominant =
        std::abs(ops.weighted_op.diag) >=
        std::abs(ops.weighted_op.lower) + std::abs(ops.weighted_op.upper);
    return ops;
}

double lower_boundary_value(const MarketParams& m, OptionKind kind, const GridSpec& grid, double t) {
    if (kind == OptionKind::call) return 0.0;
    const double rem = m.maturity - t;
    return m.strike * std::exp(-m.rate * rem) -
           std::exp(grid.x_min) * std::exp(-m.dividend * rem);
}

double upper_boundary_value(const MarketParams& m, OptionKind kind, const GridSpec& grid, double t) {
    if (kind == OptionKind::put) return 0.0;
    const double rem = m.maturity - t;
    return std::exp(grid.x_max) * std::exp(-m.dividend * rem) -
           m.strike * std::exp(-m.rate * rem);
}

std::vector<double> boundary_vector(int level, const MarketParams& m, OptionKind kind,
                                    const PdeCoefficients& coeffs, const GridSpec& grid,
                                    const MemoryWeights& w) {
    if (level < 0 || level > w.steps())
        throw std::invalid_argument("boundary_vector: level outside 0..N");
    const double dx = grid.dx();
    const double d = w.scale;
    const double cl = coeffs.diffusion * d / (dx * dx) - coeffs.drift * d / (2.0 * dx);
    const double cu = coeffs.diffusion * d / (dx * dx) + coeffs.drift * d / (2.0 * dx);
    const double t = level * w.dt;
    std::vector<double> g(static_cast<size_t>(grid.n_space) - 1, 0.0);
    g.front() = cl * lower_boundary_value(m, kind, grid, t);
    g.back() = cu * upper_boundary_value(m, kind, grid, t);
    return g;
}

}  // namespace tsbs

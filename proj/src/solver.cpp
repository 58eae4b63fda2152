#include "tsbs/solver.hpp"

#include <cmath>
#include <limits>

namespace tsbs {

double SolutionSurface::max_abs() const {
    double m = 0.0;
    for (double v : values) {
        if (!std::isfinite(v)) return std::numeric_limits<double>::infinity();
        m = std::max(m, std::abs(v));
    }
    return m;
}

bool SolutionSurface::finite() const {
    for (double v : values)
        if (!std::isfinite(v)) return false;
    return true;
}

double SolutionSurface::interior_l2(int level) const {
    double s = 0.0;
    for (int i = 1; i < grid.n_space; ++i) {
        const double v = at(level, i);
        s += v * v;
    }
    return std::sqrt(grid.dx() * s);
}

namespace {

double initial_value(double x, const MarketParams& m, OptionKind kind,
                     const std::optional<double>& width) {
    if (!width) return payoff(std::exp(x), m.strike, kind);
    const double call = smoothed_payoff(x, m.strike, *width);
    if (kind == OptionKind::call) return call;
    // Smoothing is a linear average and put = call - e^x + K pointwise.
    return call - std::exp(x) * std::sinh(*width) / *width + m.strike;
}

}  // namespace

std::vector<double> advance_level(const std::vector<std::vector<double>>& levels, int k,
                                  const SchemeOperators& ops, const MemoryWeights& w,
                                  const BoundaryProvider& boundary, double lambda, double dt,
                                  double theta, StepReading reading) {
    if (k < 0 || static_cast<size_t>(k) + 1 != levels.size())
        throw std::invalid_argument("advance_level: levels must hold u^0..u^k");
    const std::vector<double>& u0 = levels.front();
    const size_t n = u0.size();
    const double lam_a = std::pow(lambda, w.alpha);
    const double d = w.scale;
    const double temper = std::exp(-lambda * dt);

    std::vector<double> rhs(n, 0.0);
    if (k > 0) {
        // History sum over j = 0..k-1 with the printed per-branch tempering.
        for (int j = 0; j < k; ++j) {
            const double weight = (1.0 - theta) * std::exp(-(j + 1.0) * dt * lambda) +
                                  theta * std::exp(-static_cast<double>(j) * dt * lambda);
            const double cj = w.diff(j) * weight;
            const std::vector<double>& uk = levels[static_cast<size_t>(k - j)];
            for (size_t i = 0; i < n; ++i) rhs[i] += cj * (uk[i] - u0[i]);
        }
    }

    double coef0;
    if (k == 0 || reading == StepReading::first_line_constant)
        coef0 = (1.0 - theta) * (1.0 - d * lam_a) + theta * (1.0 - d * lam_a * temper);
    else
        coef0 = (1.0 - theta) * (1.0 - d * lam_a) + theta * (1.0 - d * lam_a) * temper;
    for (size_t i = 0; i < n; ++i) rhs[i] += coef0 * u0[i];

    {
        const std::vector<double> g_new = boundary(k + 1);
        for (size_t i = 0; i < n; ++i) rhs[i] += (1.0 - theta) * g_new[i];
    }
    if (theta > 0.0) {
        // The explicit branch carries its own (older) boundary level; at k=0
        // the printed first line uses G^0 without the tempering factor.
        const std::vector<double> g_old = boundary(k);
        const double gw = (k == 0) ? theta : theta * temper;
        for (size_t i = 0; i < n; ++i) rhs[i] += gw * g_old[i];

        const std::vector<double> bu = ops.explicit_op.apply(levels.back());
        for (size_t i = 0; i < n; ++i) rhs[i] += theta * temper * bu[i];
    }

    if (theta == 1.0) return rhs;
    return solve_tridiagonal(ops.weighted_op, rhs, "weighted scheme step");
}

SolutionSurface solve(const MarketParams& m, const SubdiffusionParams& sub, const GridSpec& grid,
                      const SolverOptions& options) {
    m.validate();
    sub.validate();
    grid.validate(m);

    const int n = grid.n_space;
    const int N = grid.n_time;
    const double dt = grid.dt(m.maturity);
    const MemoryWeights w = memory_weights(sub.alpha, N, dt);
    const PdeCoefficients coeffs = pde_coefficients(m);
    const SchemeOperators ops = assemble_operators(coeffs, sub, grid, w);

    const auto boundary = [&](int level) {
        return boundary_vector(level, m, options.kind, coeffs, grid, w);
    };

    std::vector<std::vector<double>> levels;
    levels.reserve(static_cast<size_t>(N) + 1);
    std::vector<double> interior(static_cast<size_t>(n) - 1);
    for (int i = 1; i < n; ++i)
        interior[static_cast<size_t>(i) - 1] =
            initial_value(grid.x(i), m, options.kind, options.smoothing_width);
    levels.push_back(std::move(interior));

    for (int k = 0; k < N; ++k)
        levels.push_back(advance_level(levels, k, ops, w, boundary, sub.lambda, dt, grid.theta,
                                       options.reading));

    SolutionSurface s;
    s.grid = grid;
    s.market = m;
    s.subdiffusion = sub;
    s.kind = options.kind;
    s.weighted_diagonally_dominant = ops.weighted_diagonally_dominant;
    s.values.resize(static_cast<size_t>(N + 1) * (n + 1));
    for (int k = 0; k <= N; ++k) {
        const double t = k * dt;
        double* row = s.values.data() + static_cast<size_t>(k) * (n + 1);
        row[0] = lower_boundary_value(m, options.kind, grid, t);
        row[n] = upper_boundary_value(m, options.kind, grid, t);
        const std::vector<double>& lv = levels[static_cast<size_t>(k)];
        for (int i = 1; i < n; ++i) row[i] = lv[static_cast<size_t>(i) - 1];
    }
    return s;
}

double price_at_spot(const SolutionSurface& surface, double spot) {
    if (!(spot > 0.0)) throw std::invalid_argument("price_at_spot: spot must be > 0");
    const GridSpec& g = surface.grid;
    const double lz = std::log(spot);
    if (lz < g.x_min || lz > g.x_max)
        throw std::invalid_argument("price_at_spot: spot outside the solved grid");
    const int N = g.n_time;
    const double pos = (lz - g.x_min) / g.dx();
    const double nearest = std::round(pos);
    if (std::abs(pos - nearest) < 1e-9 && nearest >= 0 && nearest <= g.n_space)
        return surface.at(N, static_cast<int>(nearest));

    // 4-point Lagrange interpolation around the bracketing interval.
    int i0 = static_cast<int>(std::floor(pos)) - 1;
    i0 = std::max(0, std::min(i0, g.n_space - 3));
    double value = 0.0;
    for (int a = 0; a < 4; ++a) {
        double basis = 1.0;
        for (int b = 0; b < 4; ++b) {
            if (a == b) continue;
            basis *= (pos - (i0 + b)) / static_cast<double>(a - b);
        }
        value += basis * surface.at(N, i0 + a);
    }
    return value;
}

double fd_price(const MarketParams& m, const SubdiffusionParams& sub, GridSpec grid,
                OptionKind kind, const SolverOptions& options) {
    grid = align_to_spot(grid, m.spot);
    SolverOptions call_options = options;
    call_options.kind = OptionKind::call;
    const SolutionSurface s = solve(m, sub, grid, call_options);
    const double call = price_at_spot(s, m.spot);
    if (kind == OptionKind::call) return call;
    const double forward = m.spot * std::exp(-m.dividend * m.maturity) -
                           m.strike * std::exp(-m.rate * m.maturity);
    return call - forward;
}

}  // namespace tsbs

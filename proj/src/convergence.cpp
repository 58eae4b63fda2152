#include "tsbs/convergence.hpp"

#include <cmath>

namespace tsbs {

OrderStudy summarize_orders(std::vector<int> ladder, std::vector<double> errors) {
    OrderStudy s;
    s.ladder = std::move(ladder);
    s.errors = std::move(errors);
    for (size_t i = 0; i + 1 < s.errors.size(); ++i) {
        if (!(s.errors[i] > s.errors[i + 1])) s.monotone = false;
        s.orders.push_back(std::log2(s.errors[i] / s.errors[i + 1]));
    }
    double sum = 0.0;
    for (double o : s.orders) sum += o;
    s.mean_order = s.orders.empty() ? 0.0 : sum / s.orders.size();
    return s;
}

OrderStudy temporal_order_study(const MarketParams& m, const SubdiffusionParams& sub, double theta,
                                double x_min, double x_max, int n_fine, std::vector<int> ladder,
                                int ref_factor) {
    if (ladder.size() < 3) throw std::invalid_argument("temporal_order_study: need >= 3 levels");
    GridSpec grid{x_min, x_max, n_fine, ladder.back() * ref_factor, theta};
    SolverOptions options;
    options.smoothing_width = grid.dx();

    const SolutionSurface ref = solve(m, sub, grid, options);
    std::vector<double> errors;
    for (int N : ladder) {
        GridSpec g = grid;
        g.n_time = N;
        const SolutionSurface u = solve(m, sub, g, options);
        double acc = 0.0;
        for (int i = 1; i < grid.n_space; ++i) {
            const double e = u.at(N, i) - ref.at(ref.grid.n_time, i);
            acc += e * e;
        }
        errors.push_back(std::sqrt(grid.dx() * acc));
    }
    return summarize_orders(std::move(ladder), std::move(errors));
}

OrderStudy spatial_order_study(const MarketParams& m, const SubdiffusionParams& sub, double theta,
                               double x_min, double x_max, int N_fine, std::vector<int> ladder,
                               int ref_factor) {
    if (ladder.size() < 3) throw std::invalid_argument("spatial_order_study: need >= 3 levels");
    const int n_ref = ladder.back() * ref_factor;
    for (int n : ladder)
        if (n_ref % n != 0)
            throw std::invalid_argument("spatial_order_study: ladder grids must nest in the reference");

    GridSpec ref_grid{x_min, x_max, n_ref, N_fine, theta};
    SolverOptions ref_options;
    ref_options.smoothing_width = ref_grid.dx();
    const SolutionSurface ref = solve(m, sub, ref_grid, ref_options);

    std::vector<double> errors;
    for (int n : ladder) {
        GridSpec g = ref_grid;
        g.n_space = n;
        SolverOptions options;
        options.smoothing_width = g.dx();
        const SolutionSurface u = solve(m, sub, g, options);
        const int stride = n_ref / n;
        double acc = 0.0;
        for (int i = 1; i < n; ++i) {
            const double e = u.at(N_fine, i) - ref.at(N_fine, i * stride);
            acc += e * e;
        }
        errors.push_back(std::sqrt(g.dx() * acc));
    }
    return summarize_orders(std::move(ladder), std::move(errors));
}

}  // namespace tsbs

#include "tsbs/subordinator.hpp"

#include <cmath>

#include "tsbs/operators.hpp"

namespace tsbs {

namespace {
constexpr double pi = 3.14159265358979323846;
constexpr long passage_step_cap = 100000000L;  // ~1e8 increments
}  // namespace

double sample_stable_increment(double alpha, double dtau, Rng& rng) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("sample_stable_increment: alpha must be in (0,1)");
    if (!(dtau > 0.0)) throw std::invalid_argument("sample_stable_increment: dtau must be > 0");
    const double v = pi * rng.uniform_open();
    const double e = rng.exponential();
    const double unit = std::sin(alpha * v) / std::pow(std::sin(v), 1.0 / alpha) *
                        std::pow(std::sin((1.0 - alpha) * v) / e, (1.0 - alpha) / alpha);
    return std::pow(dtau, 1.0 / alpha) * unit;
}

double sample_tempered_increment(double alpha, double lambda, double dtau, Rng& rng) {
    if (lambda < 0.0) throw std::invalid_argument("sample_tempered_increment: lambda must be >= 0");
    if (lambda == 0.0) return sample_stable_increment(alpha, dtau, rng);
    // Expected number of proposals is e^{dtau lambda^alpha}.
    const double cost = dtau * std::pow(lambda, alpha);
    if (cost > 30.0)
        throw NumericalError(
            "sample_tempered_increment: rejection sampling impractical (dtau * lambda^alpha > 30); "
            "use a finer operational grid");
    for (long tries = 0; tries < passage_step_cap; ++tries) {
        const double x = sample_stable_increment(alpha, dtau, rng);
        if (rng.uniform_open() < std::exp(-lambda * x)) return x;
    }
    throw NumericalError("sample_tempered_increment: rejection loop failed to accept");
}

SubordinatorSample inverse_subordinator_sample(double alpha, double lambda, double t, int points,
                                               Rng& rng) {
    if (!(t > 0.0)) throw std::invalid_argument("inverse_subordinator_sample: t must be > 0");
    if (points < 1) throw std::invalid_argument("inverse_subordinator_sample: points must be >= 1");
    SubordinatorSample s;
    s.dtau = t / points;
    double running = 0.0;
    while (running <= t) {
        running += sample_tempered_increment(alpha, lambda, s.dtau, rng);
        ++s.steps;
        if (s.steps > passage_step_cap)
            throw NumericalError("inverse_subordinator_sample: passage horizon overflow");
    }
    s.value = s.steps * s.dtau;
    return s;
}

std::vector<PathPoint> simulate_tempered_gbm_path(const PathParams& p, double t_max,
                                                  int output_points, int granularity,
                                                  const RngStream& stream) {
    p.market.validate();
    p.subdiffusion.validate();
    if (!(t_max > 0.0)) throw std::invalid_argument("simulate path: t_max must be > 0");
    if (output_points < 1 || granularity < 1)
        throw std::invalid_argument("simulate path: need positive point counts");

    // Independent streams for the subordinator and the Brownian motion.
    Rng rng_w(stream.seed, 2 * stream.stream);
    Rng rng_b(stream.seed, 2 * stream.stream + 1);

    const double dtau = t_max / (static_cast<double>(output_points) * granularity);
    const double alpha = p.subdiffusion.alpha;
    const double lambda = p.subdiffusion.lambda;

    // Subordinator path on the operational grid until it passes t_max.
    std::vector<double> w_path{0.0};
    while (w_path.back() <= t_max) {
        w_path.push_back(w_path.back() + sample_tempered_increment(alpha, lambda, dtau, rng_w));
        if (static_cast<long>(w_path.size()) > passage_step_cap)
            throw NumericalError("simulate path: passage horizon overflow");
    }
    const size_t grid_len =
        std::max(w_path.size(), static_cast<size_t>(output_points) * granularity + 1);

    // Brownian path on the same operational grid.
    std::vector<double> b_path(grid_len, 0.0);
    const double sqdt = std::sqrt(dtau);
    for (size_t i = 1; i < grid_len; ++i) b_path[i] = b_path[i - 1] + sqdt * rng_b.normal();

    const auto parent_gbm = [&](size_t idx) {
        const double tau = idx * dtau;
        return p.market.spot * std::exp(p.drift * tau + p.market.sigma * b_path[idx]);
    };

    std::vector<PathPoint> out;
    out.reserve(static_cast<size_t>(output_points) + 1);
    size_t passage = 0;  // first grid index with W > t, nondecreasing in t
    for (int i = 0; i <= output_points; ++i) {
        const double t = i * (t_max / output_points);
        PathPoint pt;
        pt.t = t;
        const size_t parent_idx = static_cast<size_t>(i) * granularity;
        pt.gbm = parent_gbm(parent_idx);
        if (i == 0) {
            pt.inverse_subordinator = 0.0;
            pt.tempered_gbm = p.market.spot;
        } else {
            while (passage < w_path.size() && w_path[passage] <= t) ++passage;
            pt.inverse_subordinator = passage * dtau;
            pt.tempered_gbm = parent_gbm(passage);
        }
        out.push_back(pt);
    }
    return out;
}

}  // namespace tsbs

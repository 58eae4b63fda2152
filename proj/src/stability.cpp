#include "tsbs/stability.hpp"

#include <cmath>
#include <stdexcept>

namespace tsbs {

const char* condition_name(StabilityCondition c) {
    switch (c) {
        case StabilityCondition::weighted_22: return "weighted-22";
        case StabilityCondition::implicit_oby1: return "implicit-oby1";
        case StabilityCondition::convergence_lemma: return "convergence-lemma";
    }
    return "unknown";
}

namespace {

ConditionReport make_report(StabilityCondition which, double lhs, double rhs,
                            const SubdiffusionParams& sub, double theta, double dt, double dx,
                            int steps) {
    ConditionReport r;
    r.condition = which;
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = lhs - rhs;
    r.satisfied = r.margin >= 0.0;
    r.alpha = sub.alpha;
    r.lambda = sub.lambda;
    r.theta = theta;
    r.dt = dt;
    r.dx = dx;
    r.steps = steps;
    return r;
}

/// sum_{j=0}^{N-1} (b_j - b_{j+1}) e^{-lambda dt (j+1)}, compensated.
double tempered_memory_sum(const MemoryWeights& w, double lambda) {
    KahanAccumulator acc;
    const int N = w.steps();
    for (int j = 0; j < N; ++j) acc.add(w.diff(j) * std::exp(-lambda * w.dt * (j + 1.0)));
    return acc.value();
}

}  // namespace

ConditionReport check_weighted_stability(const PdeCoefficients& coeffs,
                                         const SubdiffusionParams& sub, const GridSpec& grid,
                                         const MemoryWeights& w, StabilityGrouping reading) {
    sub.validate();
    const double theta = grid.theta;
    const double dt = w.dt;
    const double dx = grid.dx();
    const int N = w.steps();
    const double a = coeffs.diffusion;
    const double b = coeffs.drift;
    const double c = coeffs.discount;
    const double d = w.scale;
    const double lam_a = std::pow(sub.lambda, sub.alpha);
    const double grow = std::exp(sub.lambda * dt);
    const double decay = std::exp(-sub.lambda * dt);

    const double lhs = std::min(
        std::abs((1.0 - theta) * (c * d - d * lam_a + 1.0) + theta * grow),
        std::abs((1.0 - theta) * (4.0 * a * d / (dx * dx) + c * d - d * lam_a + 1.0) + theta * grow));

    const double b1 = w.b[1];
    const double wave = (1.0 - b1) * (theta + (1.0 - theta) * decay);
    const double x_term = wave - 4.0 * a * d * theta / (dx * dx) - c * d * theta + lam_a * d * theta;
    const double y_term = wave - c * d * theta + lam_a * d * theta;
    const double skew = b * d * theta / dx;
    double head;
    if (reading == StabilityGrouping::proof_grouping)
        head = std::sqrt(std::max(x_term * x_term, y_term * y_term) + skew * skew);
    else
        head = std::sqrt(std::max(x_term * x_term, y_term * y_term + skew * skew));

    KahanAccumulator mid;   // j = 1..N-1
    KahanAccumulator full;  // j = 0..N-1
    for (int j = 0; j < N; ++j) {
        const double weight = theta * std::exp(-sub.lambda * j * dt) +
                              (1.0 - theta) * std::exp(-sub.lambda * (j + 1.0) * dt);
        const double term = w.diff(j) * weight;
        if (j >= 1) mid.add(term);
        full.add(term);
    }
    const double tail = std::abs(theta * grow + 1.0 - theta - d * lam_a - full.value());
    const double rhs = head + mid.value() + tail;

    return make_report(StabilityCondition::weighted_22, lhs, rhs, sub, theta, dt, dx, N);
}

ConditionReport check_implicit_condition(const SubdiffusionParams& sub, double discount, double dt,
                                         int steps, StabilityCondition which) {
    sub.validate();
    if (which == StabilityCondition::weighted_22)
        throw std::invalid_argument("check_implicit_condition: use check_weighted_stability");
    const MemoryWeights w = memory_weights(sub.alpha, steps, dt);
    const double lam_a = std::pow(sub.lambda, sub.alpha);
    const double rhs = tempered_memory_sum(w, sub.lambda);
    const double lhs = which == StabilityCondition::convergence_lemma
                           ? 2.0 * w.scale * (discount - lam_a) + 1.0
                           : 1.0 - w.scale * lam_a;
    return make_report(which, lhs, rhs, sub, 0.0, dt, 0.0, steps);
}

std::pair<MarketParams, SubdiffusionParams> rescale_parameters(const MarketParams& m,
                                                               const SubdiffusionParams& sub,
                                                               double beta) {
    m.validate();
    sub.validate();
    if (!(beta > 0.0)) throw std::invalid_argument("rescale_parameters: beta must be > 0");
    if (!(m.rate > 0.0)) throw std::invalid_argument("rescale_parameters: requires rate > 0");
    MarketParams out = m;
    out.maturity = beta * m.maturity;
    out.rate = std::pow(1.0 + m.rate, 1.0 / beta) - 1.0;
    out.sigma = m.sigma / std::sqrt(beta);
    SubdiffusionParams sub_out = sub;
    sub_out.lambda = sub.lambda / beta;
    return {out, sub_out};
}

RescaleResult find_stabilizing_beta(const MarketParams& m, const SubdiffusionParams& sub,
                                    const GridSpec& grid) {
    m.validate();
    sub.validate();
    if (!(m.rate > 0.0))
        throw std::invalid_argument("find_stabilizing_beta: requires rate > 0");
    constexpr double floor = 1e-9;
    for (double beta = 1.0; beta >= floor; beta *= 0.5) {
        auto [mk, sd] = rescale_parameters(m, sub, beta);
        const ConditionReport rep = check_implicit_condition(
            sd, mk.rate, mk.maturity / grid.n_time, grid.n_time, StabilityCondition::convergence_lemma);
        if (rep.satisfied) return RescaleResult{beta, mk, sd, rep};
    }
    throw std::runtime_error(
        "find_stabilizing_beta: no beta above the 1e-9 floor satisfies the convergence condition "
        "(unexpected for rate > 0; check inputs)");
}

double optimal_theta_subdiffusive(double alpha) {
    SubdiffusionParams{alpha, 0.0}.validate();
    const double pow_term = std::pow(2.0, 1.0 - alpha);
    return (2.0 - pow_term) / (3.0 - pow_term);
}

}  // namespace tsbs

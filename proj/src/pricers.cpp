#include "tsbs/pricers.hpp"

#include <cmath>

#include "tsbs/operators.hpp"
#include "tsbs/rng.hpp"
#include "tsbs/subordinator.hpp"

namespace tsbs {

namespace {

double estimate_stderr(const std::vector<double>& values, double mean) {
    if (values.size() < 2) return 0.0;
    double acc = 0.0;
    for (double v : values) acc += (v - mean) * (v - mean);
    return std::sqrt(acc / (values.size() - 1.0)) / std::sqrt(static_cast<double>(values.size()));
}

PricerEstimate reduce(const std::vector<double>& values, int points, uint64_t seed) {
    double sum = 0.0;
    for (double v : values) sum += v;
    PricerEstimate e;
    e.repetitions = static_cast<int>(values.size());
    e.points = points;
    e.seed = seed;
    e.mean = sum / values.size();
    e.stderr_ = estimate_stderr(values, e.mean);
    return e;
}

double forward_value(const MarketParams& m) {
    return m.spot * std::exp(-m.dividend * m.maturity) -
           m.strike * std::exp(-m.rate * m.maturity);
}

template <typename ClassicalPricer>
std::vector<double> subordinated_draws(const MarketParams& m, const SubdiffusionParams& sub,
                                       int repetitions, int points, uint64_t seed,
                                       McConvention convention, ClassicalPricer&& price_at_tau) {
    m.validate();
    sub.validate();
    if (repetitions < 2) throw std::invalid_argument("subordinated pricer: repetitions must be >= 2");
    if (points < 1) throw std::invalid_argument("subordinated pricer: points must be >= 1");
    std::vector<double> values;
    values.reserve(static_cast<size_t>(repetitions));
    for (int rep = 0; rep < repetitions; ++rep) {
        Rng rng(seed, static_cast<uint64_t>(rep));
        const SubordinatorSample s =
            inverse_subordinator_sample(sub.alpha, sub.lambda, m.maturity, points, rng);
        double v;
        if (convention == McConvention::inverse_time) {
            v = price_at_tau(s.value);
        } else {
            v = s.value > m.maturity ? 0.0 : price_at_tau(m.maturity - s.value);
        }
        values.push_back(v);
    }
    return values;
}

}  // namespace

std::vector<double> mc_draw_values(const MarketParams& m, const SubdiffusionParams& sub,
                                   OptionKind kind, int repetitions, int points, uint64_t seed,
                                   McConvention convention) {
    return subordinated_draws(m, sub, repetitions, points, seed, convention,
                              [&](double tau) { return bs_price(m, kind, tau); });
}

PricerEstimate mc_price(const MarketParams& m, const SubdiffusionParams& sub, OptionKind kind,
                        int repetitions, int points, uint64_t seed, McConvention convention,
                        PutPricing puts) {
    const bool parity_put = kind == OptionKind::put && puts == PutPricing::via_parity;
    const OptionKind leg = parity_put ? OptionKind::call : kind;
    PricerEstimate e =
        reduce(mc_draw_values(m, sub, leg, repetitions, points, seed, convention), points, seed);
    if (parity_put) e.mean -= forward_value(m);
    return e;
}

double crr_binomial_price(const MarketParams& m, OptionKind kind, double tau, int steps) {
    m.validate();
    if (tau < 0.0) throw std::invalid_argument("crr_binomial_price: tau must be >= 0");
    if (steps < 1) throw std::invalid_argument("crr_binomial_price: steps must be >= 1");
    if (tau == 0.0) return payoff(m.spot, m.strike, kind);

    const double dt = tau / steps;
    const double up = std::exp(m.sigma * std::sqrt(dt));
    const double down = 1.0 / up;
    const double growth = std::exp((m.rate - m.dividend) * dt);
    const double p = (growth - down) / (up - down);
    if (!(p > 0.0 && p < 1.0))
        throw NumericalError("crr_binomial_price: risk-neutral probability outside (0,1)");
    const double disc = std::exp(-m.rate * dt);

    std::vector<double> v(static_cast<size_t>(steps) + 1);
    for (int i = 0; i <= steps; ++i) {
        const double terminal = m.spot * std::pow(up, steps - i) * std::pow(down, i);
        v[static_cast<size_t>(i)] = payoff(terminal, m.strike, kind);
    }
    for (int level = steps; level > 0; --level)
        for (int i = 0; i < level; ++i)
            v[static_cast<size_t>(i)] =
                disc * (p * v[static_cast<size_t>(i)] + (1.0 - p) * v[static_cast<size_t>(i) + 1]);
    return v[0];
}

PricerEstimate crr_price(const MarketParams& m, const SubdiffusionParams& sub, OptionKind kind,
                         int repetitions, int points, uint64_t seed, McConvention convention,
                         PutPricing puts) {
    const bool parity_put = kind == OptionKind::put && puts == PutPricing::via_parity;
    const OptionKind leg = parity_put ? OptionKind::call : kind;
    auto values = subordinated_draws(m, sub, repetitions, points, seed, convention,
                                     [&](double tau) {
                                         return tau == 0.0 ? payoff(m.spot, m.strike, leg)
                                                           : crr_binomial_price(m, leg, tau, points);
                                     });
    PricerEstimate e = reduce(values, points, seed);
    if (parity_put) e.mean -= forward_value(m);
    return e;
}

}  // namespace tsbs

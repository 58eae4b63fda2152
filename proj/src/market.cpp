#include "tsbs/market.hpp"

#include <cmath>
#include <string>

namespace tsbs {

void MarketParams::validate() const {
    if (!(spot > 0.0)) throw std::invalid_argument("market: spot must be > 0");
    if (!(strike >= 0.0)) throw std::invalid_argument("market: strike must be >= 0");
    if (!(maturity > 0.0)) throw std::invalid_argument("market: maturity must be > 0");
    if (!(sigma > 0.0)) throw std::invalid_argument("market: sigma must be > 0");
    if (!(rate >= 0.0)) throw std::invalid_argument("market: rate must be >= 0");
    if (!(dividend >= 0.0)) throw std::invalid_argument("market: dividend must be >= 0");
}

PdeCoefficients pde_coefficients(const MarketParams& m) {
    m.validate();
    PdeCoefficients c;
    c.diffusion = 0.5 * m.sigma * m.sigma;
    c.drift = m.rate - m.dividend - 0.5 * m.sigma * m.sigma;
    c.discount = m.rate;
    return c;
}

double norm_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double payoff(double spot, double strike, OptionKind kind) {
    if (spot < 0.0) throw std::invalid_argument("payoff: spot must be >= 0");
    const double intrinsic = spot - strike;
    return kind == OptionKind::call ? std::max(intrinsic, 0.0) : std::max(-intrinsic, 0.0);
}

double smoothed_payoff(double x, double strike, double width) {
    if (!(width > 0.0)) throw std::invalid_argument("smoothed_payoff: width must be > 0");
    if (strike <= 0.0) {
        // ln K = -inf: the integrand is e^{x-y} - 0 on the whole window.
        return std::exp(x) * std::sinh(width) / width;
    }
    const double kink = std::log(strike);
    if (x - width >= kink) return std::exp(x) * std::sinh(width) / width - strike;
    if (x + width <= kink) return 0.0;
    // Partial window: integrate e^{x-y} - K over y in [-width, x - ln K].
    return (std::exp(x + width) - strike * (1.0 + x - kink + width)) / (2.0 * width);
}

double bs_price(const MarketParams& m, OptionKind kind, double tau) {
    m.validate();
    if (tau < 0.0) throw std::invalid_argument("bs_price: tau must be >= 0");
    double call;
    if (tau == 0.0) {
        call = payoff(m.spot, m.strike, OptionKind::call);
    } else if (m.strike == 0.0) {
        call = m.spot * std::exp(-m.dividend * tau);
    } else {
        const double vol = m.sigma * std::sqrt(tau);
        const double d1 =
            (std::log(m.spot / m.strike) + (m.rate - m.dividend + 0.5 * m.sigma * m.sigma) * tau) / vol;
        const double d2 = d1 - vol;
        call = m.spot * std::exp(-m.dividend * tau) * norm_cdf(d1) -
               m.strike * std::exp(-m.rate * tau) * norm_cdf(d2);
    }
    if (kind == OptionKind::call) return call;
    if (tau == 0.0) return payoff(m.spot, m.strike, OptionKind::put);
    return call - m.spot * std::exp(-m.dividend * tau) + m.strike * std::exp(-m.rate * tau);
}

double parity_gap(double call_price, double put_price, const MarketParams& m) {
    m.validate();
    const double forward = m.spot * std::exp(-m.dividend * m.maturity) -
                           m.strike * std::exp(-m.rate * m.maturity);
    return call_price - put_price - forward;
}

}  // namespace tsbs

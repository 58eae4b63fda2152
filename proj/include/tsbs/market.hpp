#pragma once

#include <stdexcept>

namespace tsbs {

enum class OptionKind { call, put };

/// Contract and market inputs shared by every pricer.
struct MarketParams {
    double spot = 1.0;      // Z_0
    double strike = 1.0;    // K
    double maturity = 1.0;  // T, in the same time unit as the rates
    double rate = 0.0;      // r, continuously compounded
    double dividend = 0.0;  // continuous yield
    double sigma = 0.2;     // volatility per sqrt(time unit)

    // Throws std::invalid_argument on violated invariants.
    // r = 0 is accepted here (only the rescaling search needs r > 0).
    void validate() const;
};

/// Coefficients of the log-price operator a u_xx + b u_x - c u.
struct PdeCoefficients {
    double diffusion = 0.0;  // a = sigma^2 / 2
    double drift = 0.0;      // b = r - dividend - sigma^2 / 2
    double discount = 0.0;   // c = r
};

PdeCoefficients pde_coefficients(const MarketParams& m);

/// Standard normal CDF via std::erfc; absolute error well below 1e-12.
double norm_cdf(double x);

/// Vanilla payoff in the spot variable.
double payoff(double spot, double strike, OptionKind kind);

/// Rectangle average of the call payoff in log-price over [x-width, x+width],
/// evaluated in closed form (three-piece split at x = ln strike).
double smoothed_payoff(double x, double strike, double width);

/// Black-Scholes value with continuous dividend yield; tau is time to
/// maturity, tau = 0 returns the payoff. Puts come from put-call parity.
double bs_price(const MarketParams& m, OptionKind kind, double tau);

/// call - put - (Z0 e^{-dT} - K e^{-rT}); near zero certifies consistency.
double parity_gap(double call_price, double put_price, const MarketParams& m);

}  // namespace tsbs

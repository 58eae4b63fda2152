#pragma once

#include <vector>

#include "tsbs/market.hpp"
#include "tsbs/rng.hpp"
#include "tsbs/subdiffusion.hpp"

namespace tsbs {

/// One grid-first-passage realization of the inverse subordinator: the first
/// operational time tau at which the running subordinator exceeds the
/// physical level t. The value is a multiple of dtau, biased upward by
/// O(dtau).
struct SubordinatorSample {
    double value = 0.0;  // S_{alpha,lambda}(t)
    long steps = 0;      // increments consumed until passage
    double dtau = 0.0;   // operational-time grid step
};

/// One increment over dtau of the one-sided alpha-stable subordinator
/// (Laplace transform e^{-dtau u^alpha}), by Kanter's trigonometric
/// representation. Always strictly positive.
double sample_stable_increment(double alpha, double dtau, Rng& rng);

/// Tempered increment by exponential-tilting rejection: propose stable,
/// accept with probability e^{-lambda X}. Expected proposals e^{dtau
/// lambda^alpha}; throws NumericalError once that cost passes e^30 (use a
/// finer operational grid). lambda = 0 short-circuits to the stable sampler.
double sample_tempered_increment(double alpha, double lambda, double dtau, Rng& rng);

/// First passage of the running subordinator above t on a grid with
/// dtau = t / points.
SubordinatorSample inverse_subordinator_sample(double alpha, double lambda, double t, int points,
                                               Rng& rng);

/// Physical-measure path simulation inputs (drift mu is never used for
/// pricing).
struct PathParams {
    MarketParams market;
    SubdiffusionParams subdiffusion;
    double drift = 0.0;  // mu
};

struct PathPoint {
    double t = 0.0;
    double gbm = 0.0;                    // Z(t) on the operational clock
    double tempered_gbm = 0.0;           // Z(S(t))
    double inverse_subordinator = 0.0;   // S(t)
};

/// Couples one Brownian path with one independent subordinator path on a
/// shared operational-time grid, so the time-changed values are exactly a
/// subsequence-with-repeats of the parent path values. Emits output_points+1
/// rows covering [0, t_max]; `granularity` sets the operational substeps per
/// output interval.
std::vector<PathPoint> simulate_tempered_gbm_path(const PathParams& p, double t_max,
                                                  int output_points, int granularity,
                                                  const RngStream& stream);

}  // namespace tsbs

#include "tsbs/memory_weights.hpp"

#include <cmath>
#include <stdexcept>

namespace tsbs {

MemoryWeights memory_weights(double alpha, int steps, double dt) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("memory_weights: alpha must be in (0,1)");
    if (steps < 1) throw std::invalid_argument("memory_weights: need at least one step");
    if (!(dt > 0.0)) throw std::invalid_argument("memory_weights: dt must be > 0");

    MemoryWeights w;
    w.alpha = alpha;
    w.dt = dt;
    w.scale = std::tgamma(2.0 - alpha) * std::pow(dt, alpha);
    w.b.resize(static_cast<size_t>(steps) + 1);
    const double p = 1.0 - alpha;
    for (int j = 0; j <= steps; ++j)
        w.b[j] = std::pow(j + 1.0, p) - std::pow(static_cast<double>(j), p);
    return w;
}

double kahan_sum(const std::vector<double>& terms) {
    KahanAccumulator acc;
    for (double t : terms) acc.add(t);
    return acc.value();
}

}  // namespace tsbs

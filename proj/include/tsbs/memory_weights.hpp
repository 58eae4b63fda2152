#pragma once

#include <vector>

namespace tsbs {

/// Weights of the L1-type discretization of the (tempered) Caputo derivative:
/// b_j = (j+1)^{1-alpha} - j^{1-alpha} for j = 0..N, plus the step scale
/// d = Gamma(2-alpha) * dt^alpha. b_0 = 1, b_j > 0, strictly decreasing, and
/// sum_{j<k}(b_j - b_{j+1}) + b_k = 1 for every k <= N.
struct MemoryWeights {
    double alpha = 0.0;
    double dt = 0.0;
    double scale = 0.0;      // d
    std::vector<double> b;   // b_0..b_N

    double diff(int j) const { return b[j] - b[j + 1]; }  // b_j - b_{j+1}
    int steps() const { return static_cast<int>(b.size()) - 1; }
};

MemoryWeights memory_weights(double alpha, int steps, double dt);

/// Compensated (Kahan) sum; condition margins near zero depend on it.
double kahan_sum(const std::vector<double>& terms);

class KahanAccumulator {
public:
    void add(double x) {
        const double y = x - carry_;
        const double t = sum_ + y;
        carry_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

}  // namespace tsbs

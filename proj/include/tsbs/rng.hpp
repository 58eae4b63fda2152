#pragma once

#include <cmath>
#include <cstdint>

namespace tsbs {

/// xoshiro256++ with splitmix64 seeding. Hand-rolled so that every stream is
/// bit-identical across platforms and standard libraries; all variate
/// transformations below use explicit formulas for the same reason.
/// Independent streams come from mixing a stream index into the seed.
class Rng {
public:
    explicit Rng(uint64_t seed, uint64_t stream = 0) {
        uint64_t sm = seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1));
        for (auto& word : state_) word = splitmix64(sm);
    }

    uint64_t next() {
        const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform on the open interval (0,1); never returns an endpoint.
    double uniform_open() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

    double exponential() { return -std::log(uniform_open()); }

    /// Box-Muller without caching: consumes two uniforms per draw.
    double normal() {
        const double u1 = uniform_open();
        const double u2 = uniform_open();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static uint64_t splitmix64(uint64_t& s) {
        uint64_t z = (s += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    uint64_t state_[4];
};

/// (seed, stream) pair: identical pairs reproduce identical sequences.
struct RngStream {
    uint64_t seed = 0;
    uint64_t stream = 0;
    Rng make() const { return Rng(seed, stream); }
};

}  // namespace tsbs

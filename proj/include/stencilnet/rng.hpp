#pragma once

#include <cstdint>

namespace stencilnet {

/// Counter-based generator: the i-th draw is splitmix64(seed + i*GAMMA), so a
/// stream is fully determined by its 64-bit seed and draw index. Independent
/// streams are derived with fork(); every dataset records the seed it used.
class CounterRng {
public:
    explicit CounterRng(uint64_t seed) : seed_(seed) {}

    uint64_t next_u64();

    /// Uniform in [0, 1).
    double uniform();
    /// Uniform in [a, b).
    double uniform(double a, double b);
    /// Standard normal via Box-Muller (implementation-independent, unlike
    /// std::normal_distribution).
    double normal();
    /// Uniform integer in [0, n). Modulo bias is negligible for n << 2^64.
    uint64_t uniform_int(uint64_t n);

    /// Derive an independent stream keyed by `stream`.
    CounterRng fork(uint64_t stream) const;

    uint64_t seed() const { return seed_; }

private:
    uint64_t seed_;
    uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace stencilnet

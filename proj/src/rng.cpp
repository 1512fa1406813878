#include "stencilnet/rng.hpp"

#include <cmath>
#include <numbers>

namespace stencilnet {

namespace {

constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ull;

uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

uint64_t CounterRng::next_u64() {
    ++counter_;
    return mix64(seed_ + counter_ * kGamma);
}

double CounterRng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::uniform(double a, double b) {
    return a + (b - a) * uniform();
}

double CounterRng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // u1 in (0,1] keeps the log finite.
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

uint64_t CounterRng::uniform_int(uint64_t n) {
    return next_u64() % n;
}

CounterRng CounterRng::fork(uint64_t stream) const {
    return CounterRng(mix64(seed_ + (stream + 1) * 0x632BE59BD9B4E019ull));
}

}  // namespace stencilnet

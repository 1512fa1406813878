#pragma once

#include <span>
#include <vector>

#include "stencilnet/mlp.hpp"

namespace stencilnet {

struct AdamConfig {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

/// Adam with bias correction over one flat parameter vector.
class AdamState {
public:
    AdamState() = default;
    AdamState(size_t n, AdamConfig cfg = {}) : cfg_(cfg), m_(n, 0.0), v_(n, 0.0) {}

    void step(std::span<double> params, std::span<const double> grads);

    long step_count() const { return t_; }
    const AdamConfig& config() const { return cfg_; }

private:
    AdamConfig cfg_;
    std::vector<double> m_, v_;
    long t_ = 0;
};

/// Structured convenience over MlpParams; grads laid out like flatten_params.
void adam_step(MlpParams& params, std::span<const double> grads, AdamState& state);

}  // namespace stencilnet

#include "stencilnet/adam.hpp"

#include <cmath>

#include "stencilnet/common.hpp"

namespace stencilnet {

void AdamState::step(std::span<double> params, std::span<const double> grads) {
    require(params.size() == m_.size() && grads.size() == m_.size(),
            "adam: shape mismatch with registered state");
    ++t_;
    const double bc1 = 1.0 - std::pow(cfg_.beta1, t_);
    const double bc2 = 1.0 - std::pow(cfg_.beta2, t_);
    for (size_t i = 0; i < params.size(); ++i) {
        const double g = grads[i];
        m_[i] = cfg_.beta1 * m_[i] + (1.0 - cfg_.beta1) * g;
        v_[i] = cfg_.beta2 * v_[i] + (1.0 - cfg_.beta2) * g * g;
        const double mhat = m_[i] / bc1;
        const double vhat = v_[i] / bc2;
        params[i] -= cfg_.lr * mhat / (std::sqrt(vhat) + cfg_.epsilon);
    }
}

void adam_step(MlpParams& params, std::span<const double> grads, AdamState& state) {
    auto flat = flatten_params(params);
    state.step(flat, grads);
    unflatten_params(flat, params);
}

}  // namespace stencilnet

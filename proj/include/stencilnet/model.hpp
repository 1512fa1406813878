#pragma once

#include <optional>
#include <string>

#include "stencilnet/forcing.hpp"
#include "stencilnet/grid.hpp"
#include "stencilnet/mlp.hpp"
#include "stencilnet/tape.hpp"

namespace stencilnet {

/// A trained discretization operator. The parameterization is specific to the
/// resolution it was trained at, so dx/dt travel with the weights.
struct StencilNetModel {
    MlpParams params;
    int radius = 3;  // m
    double trained_dx = 0.0;
    double trained_dt = 0.0;
    std::string problem;  // informational tag, not serialized
};

/// Known forcing supplied to rollouts: the network learns the unforced
/// operator and f(x, t) is added at the RK stage times.
struct RolloutForcing {
    ForcingParams params;
    std::vector<double> positions;
};

/// out[i] = MLP(theta, u on the stencil around i), shared weights, periodic
/// wrap. Exactly translation equivariant for integer shifts.
void apply_operator(const StencilNetModel& model, std::span<const double> u,
                    std::span<double> out);
Field apply_operator(const StencilNetModel& model, const Field& u);

/// |k| TVD-RK3 steps of the learned operator from u0 (negative k integrates
/// with -dt). Returns the |k| successive fields; t0 anchors the forcing clock.
/// Blow-up throws numerical_error naming the step.
std::vector<Field> rollout_k(const StencilNetModel& model, const Field& u0, int k,
                             const RolloutForcing* forcing = nullptr, double t0 = 0.0);

/// Autonomous prediction: n_steps rollout recorded as a trajectory (row 0 is
/// u0).
Trajectory predict(const StencilNetModel& model, const Grid& grid, const Field& u0, int n_steps,
                   const RolloutForcing* forcing = nullptr, double t0 = 0.0);

/// Checkpoint container, little-endian:
///   "STNM" | version u32 | m u32 | layer count u32 |
///   per layer: rows u32, cols u32, W row-major f64, b f64 | dx f64 | dt f64
void save_checkpoint(const std::string& path, const StencilNetModel& model);
StencilNetModel load_checkpoint(const std::string& path);

namespace ad {

/// Network parameters registered as tape leaves.
struct TapedMlp {
    struct Layer {
        ValueId weight;
        ValueId bias;  // 1 x out
    };
    std::vector<Layer> layers;
    int radius = 0;
};

TapedMlp tape_mlp(Tape& tape, const MlpParams& params, int radius);

/// gather -> affine/ELU chain; u is an n x 1 field value.
ValueId taped_apply_operator(Tape& tape, const TapedMlp& mlp, ValueId u);

/// One TVD-RK3 step of the taped operator (optionally plus known forcing at
/// the stage times). Identical arithmetic to rk3_tvd_step.
ValueId taped_rk3_step(Tape& tape, const TapedMlp& mlp, ValueId u, double t, double dt,
                       const RolloutForcing* forcing = nullptr);

/// Copy tape gradients for the registered parameters into a flat buffer laid
/// out like flatten_params (accumulating).
void accumulate_param_gradients(const Tape& tape, const TapedMlp& mlp,
                                std::span<double> flat_grads);

}  // namespace ad

}  // namespace stencilnet

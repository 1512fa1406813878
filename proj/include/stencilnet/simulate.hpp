#pragma once

#include <optional>

#include "stencilnet/forcing.hpp"
#include "stencilnet/grid.hpp"

namespace stencilnet {

enum class PdeKind { forced_burgers, ks, kdv, advection };

struct PdeProblem {
    PdeKind kind = PdeKind::forced_burgers;
    double diffusion = 0.0;   // D (burgers)
    double dispersion = 0.0;  // delta (kdv)
    double speed = 0.0;       // c (advection)
    std::optional<ForcingParams> forcing;
    double x0 = 0.0;          // coordinate of grid index 0
};

enum class Scheme { weno_rk3, spectral };

/// Integrate from u0 and record every step: rows at t = 0, dt, ..., through
/// >= horizon. dt <= 0 selects it automatically (CFL for weno_rk3 from the
/// initial field with a 2x advective headroom; 0.05 for the spectral KS case,
/// an advective estimate for spectral KdV). Any |u| > 1e6 aborts with the
/// blow-up time.
Trajectory simulate(const PdeProblem& problem, const Grid& grid, const Field& u0, double horizon,
                    Scheme scheme, double dt = 0.0);

}  // namespace stencilnet

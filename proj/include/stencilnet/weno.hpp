#pragma once

#include <span>

#include "stencilnet/common.hpp"

namespace stencilnet {

/// Adaptive-weight parameters. Defaults are the standard fifth-order choices;
/// the convergence tests pin them down rather than trusting the constants.
struct WenoParams {
    double epsilon = 1e-6;
    int power = 2;
};

/// Per-interface scratch, exposed for tests that inspect the weights.
struct WenoWorkspace {
    double candidates[3];  // r-th order reconstructions per candidate stencil
    double smoothness[3];  // IS_k >= 0
    double weights[3];     // omega_k >= 0, sum = 1
};

/// Left-biased fifth-order reconstruction at the i+1/2 interface from the
/// five values (f_{i-2}, ..., f_{i+2}). Non-finite input throws.
double weno5_reconstruct(std::span<const double, 5> f, const WenoParams& params = {},
                         WenoWorkspace* ws = nullptr);

/// RHS of u_t = -d(u^2)/dx + D u_xx + g on a periodic field. Convection uses
/// global Lax-Friedrichs splitting f^{+/-} = (f(u) +/- alpha*u)/2 with
/// alpha = max|2u|, each branch reconstructed upwind-biased; diffusion is the
/// second-order central stencil.
void weno_rhs_burgers(std::span<const double> u, double diffusion,
                      std::span<const double> forcing, double dx, std::span<double> out,
                      const WenoParams& params = {});

/// RHS of u_t = -c u_x (flux cu; the LF split reduces to pure upwinding).
void weno_rhs_advection(std::span<const double> u, double speed, double dx,
                        std::span<double> out, const WenoParams& params = {});

}  // namespace stencilnet

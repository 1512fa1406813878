#pragma once

#include <functional>
#include <span>

#include "stencilnet/common.hpp"

namespace stencilnet {

/// du/dt = F(u, t); writes into the provided output span.
using RhsFn = std::function<void(std::span<const double>, double, std::span<double>)>;

namespace rk3_detail {
// Stage combinations shared by the classical stepper and the taped replay so
// both paths round identically.
inline double euler(double dt, double f, double u) { return dt * f + u; }
inline double blend(double a, double x, double b, double y) { return a * x + b * y; }
}  // namespace rk3_detail

/// One TVD-RK3 step (Shu-Osher form):
///   u1 = u + dt F(u, t)
///   u2 = 3/4 u + 1/4 (u1 + dt F(u1, t+dt))
///   u' = 1/3 u + 2/3 (u2 + dt F(u2, t+dt/2))
/// dt may be negative (backward integration). Non-finite stage values throw
/// numerical_error naming the stage.
void rk3_tvd_step(std::span<const double> u, double t, double dt, const RhsFn& rhs,
                  std::span<double> out);

/// dt = safety * min(dx^2/(2 D), dx/u_max); vanishing terms drop out. Both
/// limits absent -> invalid_argument (the step would be unbounded).
double cfl_dt(double dx, double diffusion, double u_max, double safety = 0.9);

}  // namespace stencilnet

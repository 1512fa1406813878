#include "stencilnet/time_integration.hpp"

#include <limits>
#include <vector>

namespace stencilnet {

void rk3_tvd_step(std::span<const double> u, double t, double dt, const RhsFn& rhs,
                  std::span<double> out) {
    require(dt != 0.0, "rk3 step size must be non-zero");
    require(out.size() == u.size(), "rk3 output size mismatch");
    const size_t n = u.size();
    using rk3_detail::blend;
    using rk3_detail::euler;

    std::vector<double> f(n), s1(n), s2(n);

    rhs(u, t, f);
    for (size_t i = 0; i < n; ++i) s1[i] = euler(dt, f[i], u[i]);
    if (!all_finite(s1)) throw numerical_error("rk3: non-finite state after stage 1");

    rhs(s1, t + dt, f);
    for (size_t i = 0; i < n; ++i) s2[i] = blend(0.75, u[i], 0.25, euler(dt, f[i], s1[i]));
    if (!all_finite(s2)) throw numerical_error("rk3: non-finite state after stage 2");

    rhs(s2, t + 0.5 * dt, f);
    for (size_t i = 0; i < n; ++i)
        out[i] = blend(1.0 / 3.0, u[i], 2.0 / 3.0, euler(dt, f[i], s2[i]));
    if (!all_finite(out)) throw numerical_error("rk3: non-finite state after stage 3");
}

double cfl_dt(double dx, double diffusion, double u_max, double safety) {
    require(dx > 0.0, "dx must be positive");
    require(safety > 0.0 && safety <= 1.0, "safety factor must be in (0, 1]");
    require(diffusion >= 0.0 && u_max >= 0.0, "diffusion and u_max must be non-negative");
    double dt = std::numeric_limits<double>::infinity();
    if (diffusion > 0.0) dt = std::min(dt, dx * dx / (2.0 * diffusion));
    if (u_max > 0.0) dt = std::min(dt, dx / u_max);
    require(std::isfinite(dt), "cfl_dt: no diffusion and no advection speed bounds the step");
    return safety * dt;
}

}  // namespace stencilnet

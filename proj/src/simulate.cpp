#include "stencilnet/simulate.hpp"

#include <cmath>

#include "stencilnet/spectral.hpp"
#include "stencilnet/time_integration.hpp"
#include "stencilnet/weno.hpp"

namespace stencilnet {

namespace {

constexpr double kBlowupThreshold = 1e6;

void check_blowup(std::span<const double> u, double t) {
    for (double v : u) {
        if (!std::isfinite(v) || std::fabs(v) > kBlowupThreshold)
            throw numerical_error("solution blow-up at t = " + std::to_string(t));
    }
}

Trajectory simulate_weno(const PdeProblem& problem, const Grid& grid, const Field& u0,
                         double horizon, double dt) {
    const auto x = grid_positions(grid, problem.x0);

    if (dt <= 0.0) {
        double u_max = 0.0;
        for (double v : u0)
            u_max = std::max(u_max, problem.kind == PdeKind::advection ? std::fabs(problem.speed)
                                                                       : std::fabs(2.0 * v));
        // headroom for forcing-driven growth of |u|
        dt = cfl_dt(grid.spacing, problem.diffusion, 2.0 * u_max, 0.9);
    }

    const int n_rows = static_cast<int>(std::ceil(horizon / dt - 1e-12)) + 1;
    Trajectory traj = make_trajectory(grid, dt, n_rows);

    std::vector<double> forcing;
    RhsFn rhs = [&](std::span<const double> u, double t, std::span<double> out) {
        switch (problem.kind) {
            case PdeKind::advection:
                weno_rhs_advection(u, problem.speed, grid.spacing, out);
                break;
            case PdeKind::forced_burgers: {
                std::span<const double> f;
                if (problem.forcing) {
                    forcing.resize(x.size());
                    eval_forcing(*problem.forcing, x, t, forcing);
                    f = forcing;
                }
                weno_rhs_burgers(u, problem.diffusion, f, grid.spacing, out);
                break;
            }
            default:
                throw std::invalid_argument("weno_rk3 scheme supports burgers and advection only");
        }
    };

    Field u = u0, next(u0.size());
    std::copy(u.begin(), u.end(), traj.row(0).begin());
    for (int n = 1; n < n_rows; ++n) {
        rk3_tvd_step(u, (n - 1) * dt, dt, rhs, next);
        check_blowup(next, n * dt);
        u = next;
        std::copy(u.begin(), u.end(), traj.row(n).begin());
    }
    return traj;
}

Trajectory simulate_spectral(const PdeProblem& problem, const Grid& grid, const Field& u0,
                             double horizon, double dt) {
    SpectralProblem sp;
    switch (problem.kind) {
        case PdeKind::ks:
            sp = make_ks_problem(grid);
            if (dt <= 0.0) dt = 0.05;
            break;
        case PdeKind::kdv:
            sp = make_kdv_problem(grid, problem.dispersion);
            if (dt <= 0.0) {
                const double u_max = std::max(max_abs(u0), 1e-3);
                dt = std::min(0.05, 0.2 * grid.spacing / (2.0 * u_max));
            }
            break;
        default:
            throw std::invalid_argument("spectral scheme supports ks and kdv only");
    }

    Etdrk4 stepper(std::move(sp), dt);
    Dft dft(grid.n_points);

    const int n_rows = static_cast<int>(std::ceil(horizon / dt - 1e-12)) + 1;
    Trajectory traj = make_trajectory(grid, dt, n_rows);

    Spectrum v;
    dft.forward(u0, v);
    std::vector<double> u;
    std::copy(u0.begin(), u0.end(), traj.row(0).begin());
    for (int n = 1; n < n_rows; ++n) {
        stepper.step(v);
        dft.inverse(v, u);
        check_blowup(u, n * dt);
        std::copy(u.begin(), u.end(), traj.row(n).begin());
    }
    return traj;
}

}  // namespace

Trajectory simulate(const PdeProblem& problem, const Grid& grid, const Field& u0, double horizon,
                    Scheme scheme, double dt) {
    require(static_cast<int>(u0.size()) == grid.n_points, "initial condition size mismatch");
    require(horizon > 0.0, "simulation horizon must be positive");
    require(all_finite(u0), "initial condition must be finite");

    if (scheme == Scheme::weno_rk3) return simulate_weno(problem, grid, u0, horizon, dt);
    return simulate_spectral(problem, grid, u0, horizon, dt);
}

}  // namespace stencilnet

#include "stencilnet/grid.hpp"

namespace stencilnet {

Grid make_grid(double length, int n_points) {
    require(length > 0.0, "grid length must be positive");
    require(n_points >= 3, "grid needs at least 3 points");
    Grid g;
    g.length = length;
    g.n_points = n_points;
    g.spacing = length / n_points;
    return g;
}

std::vector<double> grid_positions(const Grid& g, double x0) {
    std::vector<double> x(g.n_points);
    for (int i = 0; i < g.n_points; ++i) x[i] = x0 + i * g.spacing;
    return x;
}

StencilPatch gather_stencil(std::span<const double> field, int i, int m) {
    const int n = static_cast<int>(field.size());
    require(m >= 0 && 2 * m + 1 <= n, "stencil wider than grid");
    require(i >= 0 && i < n, "stencil center out of range");
    StencilPatch p;
    p.radius = m;
    p.values.resize(2 * m + 1);
    for (int c = -m; c <= m; ++c) {
        int j = i + c;
        if (j < 0) j += n;
        if (j >= n) j -= n;
        p.values[c + m] = field[j];
    }
    return p;
}

Trajectory make_trajectory(const Grid& g, double dt, int n_steps) {
    require(dt > 0.0, "trajectory dt must be positive");
    require(n_steps >= 1, "trajectory needs at least one row");
    Trajectory t;
    t.grid = g;
    t.dt = dt;
    t.n_steps = n_steps;
    t.data.assign(static_cast<size_t>(n_steps) * g.n_points, 0.0);
    return t;
}

Trajectory subsample(const Trajectory& traj, int c_space, int c_time) {
    require(c_space >= 1 && c_time >= 1, "sub-sampling factors must be >= 1");
    require(traj.grid.n_points % c_space == 0, "spatial factor must divide N_x");

    const int nx = traj.grid.n_points / c_space;
    const int nt = (traj.n_steps - 1) / c_time + 1;

    Trajectory out;
    out.grid = make_grid(traj.grid.length, nx);
    out.dt = traj.dt * c_time;
    out.n_steps = nt;
    out.data.resize(static_cast<size_t>(nt) * nx);
    for (int n = 0; n < nt; ++n) {
        auto src = traj.row(n * c_time);
        for (int i = 0; i < nx; ++i) out.at(n, i) = src[i * c_space];
    }
    return out;
}

Trajectory crop_time(const Trajectory& traj, double t_max) {
    require(t_max >= 0.0, "crop window must be non-negative");
    int nt = static_cast<int>(t_max / traj.dt + 1e-9) + 1;
    if (nt > traj.n_steps) nt = traj.n_steps;
    Trajectory out = traj;
    out.n_steps = nt;
    out.data.resize(static_cast<size_t>(nt) * traj.grid.n_points);
    return out;
}

}  // namespace stencilnet

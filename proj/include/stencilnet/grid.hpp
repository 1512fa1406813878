#pragma once

#include <span>
#include <vector>

#include "stencilnet/common.hpp"

namespace stencilnet {

/// Uniform periodic 1D grid. dx = L / N_x (the point at x = L wraps to 0).
struct Grid {
    double length = 0.0;  // L
    int n_points = 0;     // N_x
    double spacing = 0.0; // dx
    bool periodic = true;
};

Grid make_grid(double length, int n_points);

/// Grid point coordinates x_i = x0 + i*dx. The origin is a convention of the
/// problem setup, not part of the grid.
std::vector<double> grid_positions(const Grid& g, double x0 = 0.0);

/// Solution values on the symmetric stencil x_{i-m} .. x_{i+m}.
struct StencilPatch {
    std::vector<double> values;  // length 2m+1
    int radius = 0;
};

StencilPatch gather_stencil(std::span<const double> field, int i, int m);

/// Dense trajectory: row n holds the field at t = n*dt.
struct Trajectory {
    Grid grid;
    double dt = 0.0;
    int n_steps = 0;                 // N_t rows
    std::vector<double> data;        // row-major N_t x N_x

    double at(int n, int i) const { return data[static_cast<size_t>(n) * grid.n_points + i]; }
    double& at(int n, int i) { return data[static_cast<size_t>(n) * grid.n_points + i]; }
    std::span<const double> row(int n) const {
        return {data.data() + static_cast<size_t>(n) * grid.n_points,
                static_cast<size_t>(grid.n_points)};
    }
    std::span<double> row(int n) {
        return {data.data() + static_cast<size_t>(n) * grid.n_points,
                static_cast<size_t>(grid.n_points)};
    }
    Field row_copy(int n) const {
        auto r = row(n);
        return Field(r.begin(), r.end());
    }
};

Trajectory make_trajectory(const Grid& g, double dt, int n_steps);

/// Keep every c_space-th point (from index 0) and every c_time-th row (from
/// row 0). c_space must divide N_x; a non-dividing c_time truncates trailing
/// rows (callers record the truncation in dataset metadata).
Trajectory subsample(const Trajectory& traj, int c_space, int c_time);

/// Crop to rows with t <= t_max.
Trajectory crop_time(const Trajectory& traj, double t_max);

}  // namespace stencilnet

#pragma once

#include <string>

#include "stencilnet/grid.hpp"

namespace stencilnet {

/// Trajectory container, little-endian:
///   "STN1" | N_x u64 | N_t u64 | L f64 | dt f64 | N_t*N_x f64 (time-major)
void write_stn1(const std::string& path, const Trajectory& traj);
Trajectory read_stn1(const std::string& path);

/// Raw matrix variant used for noise estimates: same layout, grid taken from
/// the caller.
void write_stn1_matrix(const std::string& path, const Grid& grid, double dt, int n_rows,
                       std::span<const double> values);

bool files_identical(const std::string& a, const std::string& b);

}  // namespace stencilnet

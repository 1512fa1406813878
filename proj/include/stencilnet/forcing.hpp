#pragma once

#include <span>
#include <vector>

#include "stencilnet/rng.hpp"

namespace stencilnet {

/// Sum-of-sinusoids forcing f(x,t) = sum_i A_i sin(w_i t + 2 pi l_i x / L + phi_i).
/// Parameters are drawn uniformly: A in [-0.1, 0.1], w in [-0.4, 0.4],
/// phi in [0, 2 pi], l from the given integer wavenumber set.
struct ForcingParams {
    std::vector<double> amplitude;
    std::vector<double> omega;
    std::vector<int> wavenumber;
    std::vector<double> phase;
    double length = 0.0;

    int n_modes() const { return static_cast<int>(amplitude.size()); }
};

/// n_modes == 0 picks the default: 20 modes for the base domain
/// (wavenumbers {2..5}), otherwise one mode per wavenumber in the set.
ForcingParams sample_forcing(CounterRng& rng, double length, std::span<const int> wavenumbers,
                             int n_modes = 0);

void eval_forcing(const ForcingParams& fp, std::span<const double> x, double t,
                  std::span<double> out);
std::vector<double> eval_forcing(const ForcingParams& fp, std::span<const double> x, double t);

/// Wavenumber set for a domain of length `length`: the base domain (2 pi)
/// uses {2..5}; larger domains scale both endpoints with L to preserve the
/// physical wavenumber range, except the 8 pi case which uses {8..40}.
std::vector<int> forcing_wavenumbers(double length);

}  // namespace stencilnet

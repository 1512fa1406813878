#pragma once

#include <optional>
#include <utility>

#include <nlohmann/json_fwd.hpp>

#include "stencilnet/simulate.hpp"

namespace stencilnet {

struct NoiseSpec {
    double sigma = 0.0;  // noise magnitude as a fraction of std(U)
    uint64_t seed = 0;
};

/// V = U + eta with eta ~ sigma * N(0, std^2(U)); std(U) is the empirical
/// standard deviation over the whole trajectory. Returns the corrupted copy
/// and the exact noise realization (noisy - clean).
std::pair<Trajectory, std::vector<double>> add_noise(const Trajectory& traj,
                                                     const NoiseSpec& spec);

/// u(x, 0) = exp(-(x-3)^2) on [0, L).
Field burgers_ic(const Grid& g);

/// Three random sine modes: A in [-0.5, 0.5], phi in [0, 2 pi], l in {1,2,3}.
Field ks_ic(CounterRng& rng, const Grid& g, double x0);

enum class Recipe { burgers, ks, kdv };

struct RecipeOptions {
    uint64_t seed = 0;
    double sigma = -1.0;          // < 0: recipe default (0.3 for kdv, 0 otherwise)
    double t_train = -1.0;        // < 0: recipe default
    double domain_factor = 1.0;   // burgers only: scales L and N_x together
    std::vector<int> coarse_factors;  // empty: recipe default
};

struct CoarseSet {
    int c_space = 1;
    int c_time = 1;
    Trajectory clean;
    std::optional<Trajectory> noisy;
    std::vector<double> noise_truth;  // empty when sigma == 0
};

struct GeneratedDataset {
    Recipe recipe;
    PdeProblem problem;
    Grid grid;
    double sigma = 0.0;
    uint64_t seed = 0;
    Trajectory fine;
    std::vector<CoarseSet> coarse;
    nlohmann::json metadata() const;
};

/// Benchmark datasets: simulate the fine reference, crop to the training
/// window, and sub-sample. The coarse step is the largest multiple of the
/// fine step satisfying dt_c <= dx_c^2 / D (D taken as the second-derivative
/// coefficient), except kdv where the training step is pinned to 0.02.
GeneratedDataset make_dataset(Recipe recipe, const RecipeOptions& opts = {});

/// Reconstruct forcing parameters from dataset metadata (for prediction).
ForcingParams forcing_from_metadata(const nlohmann::json& meta);

const char* recipe_name(Recipe r);
Recipe recipe_from_name(const std::string& name);

}  // namespace stencilnet

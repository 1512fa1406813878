#include "stencilnet/datagen.hpp"

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "stencilnet/common.hpp"

namespace stencilnet {

using nlohmann::json;

std::pair<Trajectory, std::vector<double>> add_noise(const Trajectory& traj,
                                                     const NoiseSpec& spec) {
    require(spec.sigma >= 0.0, "noise magnitude must be non-negative");
    Trajectory noisy = traj;
    std::vector<double> eta(traj.data.size(), 0.0);
    if (spec.sigma > 0.0) {
        const double scale = spec.sigma * mean_std(traj.data).std;
        CounterRng rng(spec.seed);
        for (size_t i = 0; i < eta.size(); ++i) {
            eta[i] = scale * rng.normal();
            noisy.data[i] = traj.data[i] + eta[i];
        }
    }
    return {std::move(noisy), std::move(eta)};
}

Field burgers_ic(const Grid& g) {
    Field u(g.n_points);
    for (int i = 0; i < g.n_points; ++i) {
        const double x = i * g.spacing;
        u[i] = std::exp(-(x - 3.0) * (x - 3.0));
    }
    return u;
}

Field ks_ic(CounterRng& rng, const Grid& g, double x0) {
    struct Mode {
        double a, phi;
        int l;
    };
    std::vector<Mode> modes;
    for (int l = 1; l <= 3; ++l)
        modes.push_back({rng.uniform(-0.5, 0.5), rng.uniform(0.0, 2.0 * std::numbers::pi), l});
    Field u(g.n_points);
    for (int i = 0; i < g.n_points; ++i) {
        const double x = x0 + i * g.spacing;
        double s = 0.0;
        for (const auto& m : modes)
            s += m.a * std::sin(2.0 * std::numbers::pi * m.l * x / g.length + m.phi);
        u[i] = s;
    }
    return u;
}

namespace {

/// Largest integer multiple of dt_fine with c*dt_fine <= dx_c^2 / D.
int coarse_time_factor(double dx_c, double diffusion_like, double dt_fine) {
    const double bound = dx_c * dx_c / diffusion_like;
    int c = static_cast<int>(bound / dt_fine + 1e-9);
    return std::max(c, 1);
}

struct RecipeDefaults {
    double t_train;
    double sigma;
    std::vector<int> coarse_factors;
};

RecipeDefaults defaults_for(Recipe r) {
    switch (r) {
        case Recipe::burgers: return {40.0, 0.0, {2, 4, 8}};
        case Recipe::ks: return {50.0, 0.0, {4}};
        case Recipe::kdv: return {1.0, 0.3, {8}};
    }
    throw std::invalid_argument("unknown recipe");
}

}  // namespace

GeneratedDataset make_dataset(Recipe recipe, const RecipeOptions& opts) {
    const RecipeDefaults def = defaults_for(recipe);
    const double t_train = opts.t_train > 0.0 ? opts.t_train : def.t_train;
    const double sigma = opts.sigma >= 0.0 ? opts.sigma : def.sigma;
    const auto coarse_factors = opts.coarse_factors.empty() ? def.coarse_factors
                                                            : opts.coarse_factors;

    GeneratedDataset ds;
    ds.recipe = recipe;
    ds.seed = opts.seed;
    ds.sigma = sigma;

    CounterRng root(opts.seed);
    CounterRng ic_rng = root.fork(1);
    CounterRng forcing_rng = root.fork(2);
    CounterRng noise_rng = root.fork(3);

    double fine_dt = 0.0;
    double diffusion_like = 0.0;  // second-derivative coefficient bounding dt_c
    int pinned_c_time = 0;        // kdv pins the training step instead
    Field u0;

    switch (recipe) {
        case Recipe::burgers: {
            require(opts.domain_factor >= 1.0, "domain factor must be >= 1");
            const double length = 2.0 * std::numbers::pi * opts.domain_factor;
            const int n_points = static_cast<int>(std::lround(256 * opts.domain_factor));
            ds.grid = make_grid(length, n_points);
            ds.problem.kind = PdeKind::forced_burgers;
            ds.problem.diffusion = 0.02;
            ds.problem.x0 = 0.0;
            const auto wn = forcing_wavenumbers(length);
            ds.problem.forcing = sample_forcing(forcing_rng, length, wn);
            u0 = burgers_ic(ds.grid);
            fine_dt = 0.005;
            diffusion_like = ds.problem.diffusion;
            break;
        }
        case Recipe::ks: {
            ds.grid = make_grid(64.0, 256);
            ds.problem.kind = PdeKind::ks;
            ds.problem.x0 = -32.0;
            u0 = ks_ic(ic_rng, ds.grid, ds.problem.x0);
            fine_dt = 0.05;
            diffusion_like = 1.0;  // coefficient of the u_xx term
            break;
        }
        case Recipe::kdv: {
            ds.grid = make_grid(2.0, 256);
            ds.problem.kind = PdeKind::kdv;
            ds.problem.dispersion = 0.0025;
            ds.problem.x0 = -1.0;
            u0.resize(ds.grid.n_points);
            for (int i = 0; i < ds.grid.n_points; ++i)
                u0[i] = std::cos(std::numbers::pi * (ds.problem.x0 + i * ds.grid.spacing));
            fine_dt = 0.001;
            pinned_c_time = 20;  // 0.02 training step
            break;
        }
    }

    const Scheme scheme =
        recipe == Recipe::burgers ? Scheme::weno_rk3 : Scheme::spectral;
    ds.fine = simulate(ds.problem, ds.grid, u0, t_train, scheme, fine_dt);
    ds.fine = crop_time(ds.fine, t_train);

    for (int c_space : coarse_factors) {
        CoarseSet set;
        set.c_space = c_space;
        const double dx_c = ds.grid.spacing * c_space;
        set.c_time = pinned_c_time > 0 ? pinned_c_time
                                       : coarse_time_factor(dx_c, diffusion_like, fine_dt);
        set.clean = subsample(ds.fine, c_space, set.c_time);
        if (sigma > 0.0) {
            NoiseSpec spec{sigma, noise_rng.fork(c_space).seed()};
            auto [noisy, eta] = add_noise(set.clean, spec);
            set.noisy = std::move(noisy);
            set.noise_truth = std::move(eta);
        }
        ds.coarse.push_back(std::move(set));
    }
    return ds;
}

json GeneratedDataset::metadata() const {
    json meta;
    meta["recipe"] = recipe_name(recipe);
    meta["seed"] = seed;
    meta["rng"] = "splitmix64-counter";
    meta["sigma"] = sigma;
    meta["grid"] = {{"length", grid.length}, {"n_points", grid.n_points},
                    {"spacing", grid.spacing}};
    meta["x0"] = problem.x0;
    meta["fine_dt"] = fine.dt;
    meta["fine_rows"] = fine.n_steps;
    meta["crop_t_max"] = fine.dt * (fine.n_steps - 1);
    switch (problem.kind) {
        case PdeKind::forced_burgers:
            meta["problem"] = "forced_burgers";
            meta["diffusion"] = problem.diffusion;
            break;
        case PdeKind::ks: meta["problem"] = "ks"; break;
        case PdeKind::kdv:
            meta["problem"] = "kdv";
            meta["dispersion"] = problem.dispersion;
            break;
        case PdeKind::advection:
            meta["problem"] = "advection";
            meta["speed"] = problem.speed;
            break;
    }
    if (problem.forcing) {
        const auto& fp = *problem.forcing;
        meta["forcing"] = {{"amplitude", fp.amplitude},
                           {"omega", fp.omega},
                           {"wavenumber", fp.wavenumber},
                           {"phase", fp.phase},
                           {"length", fp.length},
                           {"n_modes", fp.n_modes()}};
    }
    json levels = json::array();
    for (const auto& set : coarse) {
        json c;
        c["c_space"] = set.c_space;
        c["c_time"] = set.c_time;
        c["dt"] = set.clean.dt;
        c["n_points"] = set.clean.grid.n_points;
        c["n_rows"] = set.clean.n_steps;
        c["time_truncated"] = (fine.n_steps - 1) % set.c_time != 0;
        levels.push_back(c);
    }
    meta["coarse"] = levels;
    return meta;
}

ForcingParams forcing_from_metadata(const json& meta) {
    require(meta.contains("forcing"), "metadata has no forcing block");
    const auto& f = meta.at("forcing");
    ForcingParams fp;
    fp.amplitude = f.at("amplitude").get<std::vector<double>>();
    fp.omega = f.at("omega").get<std::vector<double>>();
    fp.wavenumber = f.at("wavenumber").get<std::vector<int>>();
    fp.phase = f.at("phase").get<std::vector<double>>();
    fp.length = f.at("length").get<double>();
    return fp;
}

const char* recipe_name(Recipe r) {
    switch (r) {
        case Recipe::burgers: return "burgers";
        case Recipe::ks: return "ks";
        case Recipe::kdv: return "kdv";
    }
    return "?";
}

Recipe recipe_from_name(const std::string& name) {
    if (name == "burgers") return Recipe::burgers;
    if (name == "ks") return Recipe::ks;
    if (name == "kdv") return Recipe::kdv;
    throw std::invalid_argument("unknown recipe: " + name);
}

}  // namespace stencilnet

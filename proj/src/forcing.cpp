#include "stencilnet/forcing.hpp"

#include <cmath>
#include <numbers>

#include "stencilnet/common.hpp"

namespace stencilnet {

ForcingParams sample_forcing(CounterRng& rng, double length, std::span<const int> wavenumbers,
                             int n_modes) {
    require(!wavenumbers.empty(), "wavenumber set must be non-empty");
    require(length > 0.0, "domain length must be positive");
    if (n_modes == 0) n_modes = wavenumbers.size() == 4 ? 20 : static_cast<int>(wavenumbers.size());

    ForcingParams fp;
    fp.length = length;
    fp.amplitude.resize(n_modes);
    fp.omega.resize(n_modes);
    fp.wavenumber.resize(n_modes);
    fp.phase.resize(n_modes);
    for (int i = 0; i < n_modes; ++i) {
        fp.amplitude[i] = rng.uniform(-0.1, 0.1);
        fp.omega[i] = rng.uniform(-0.4, 0.4);
        fp.phase[i] = rng.uniform(0.0, 2.0 * std::numbers::pi);
        fp.wavenumber[i] = wavenumbers[rng.uniform_int(wavenumbers.size())];
    }
    return fp;
}

void eval_forcing(const ForcingParams& fp, std::span<const double> x, double t,
                  std::span<double> out) {
    require(out.size() == x.size(), "forcing output size mismatch");
    const double two_pi_over_l = 2.0 * std::numbers::pi / fp.length;
    for (size_t j = 0; j < x.size(); ++j) {
        double s = 0.0;
        for (int i = 0; i < fp.n_modes(); ++i)
            s += fp.amplitude[i] *
                 std::sin(fp.omega[i] * t + two_pi_over_l * fp.wavenumber[i] * x[j] + fp.phase[i]);
        out[j] = s;
    }
}

std::vector<double> eval_forcing(const ForcingParams& fp, std::span<const double> x, double t) {
    std::vector<double> out(x.size());
    eval_forcing(fp, x, t, out);
    return out;
}

std::vector<int> forcing_wavenumbers(double length) {
    const double base = 2.0 * std::numbers::pi;
    const double factor = length / base;
    int lo = 2, hi = 5;
    if (std::fabs(factor - 4.0) < 1e-9) {
        lo = 8;
        hi = 40;
    } else if (factor > 1.0 + 1e-9) {
        lo = static_cast<int>(std::lround(2.0 * factor));
        hi = static_cast<int>(std::lround(5.0 * factor));
    }
    std::vector<int> set;
    for (int l = lo; l <= hi; ++l) set.push_back(l);
    return set;
}

}  // namespace stencilnet

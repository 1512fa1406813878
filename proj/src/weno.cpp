#include "stencilnet/weno.hpp"

#include <cmath>

#include "stencilnet/fd_stencil.hpp"

namespace stencilnet {

namespace {

// Optimal weights recovering the full five-point reconstruction in smooth
// regions.
constexpr double kOptimal[3] = {1.0 / 10.0, 6.0 / 10.0, 3.0 / 10.0};

inline double sq(double x) { return x * x; }

inline int wrap(int i, int n) {
    i %= n;
    return i < 0 ? i + n : i;
}

// -(fhat_{i+1/2} - fhat_{i-1/2})/dx for a split flux: plus-branch
// reconstructed left-biased, minus-branch mirrored. Adds into out.
void flux_divergence(std::span<const double> fplus, std::span<const double> fminus, double dx,
                     const WenoParams& params, std::span<double> out) {
    const int n = static_cast<int>(fplus.size());
    // interface value at i+1/2
    auto interface_flux = [&](int i) {
        double p[5], m[5];
        for (int c = -2; c <= 2; ++c) p[c + 2] = fplus[wrap(i + c, n)];
        // mirror: right-biased stencil {i+3 .. i-1} reversed
        for (int c = -2; c <= 2; ++c) m[c + 2] = fminus[wrap(i + 1 - c, n)];
        return weno5_reconstruct(std::span<const double, 5>(p, 5), params) +
               weno5_reconstruct(std::span<const double, 5>(m, 5), params);
    };
    double left = interface_flux(-1);
    for (int i = 0; i < n; ++i) {
        const double right = interface_flux(i);
        out[i] += -(right - left) / dx;
        left = right;
    }
}

}  // namespace

double weno5_reconstruct(std::span<const double, 5> f, const WenoParams& params,
                         WenoWorkspace* ws) {
    for (double v : f) {
        if (!std::isfinite(v)) throw numerical_error("weno5: non-finite input value");
    }

    const double f0 = f[0], f1 = f[1], f2 = f[2], f3 = f[3], f4 = f[4];

    // r = 3 candidate reconstructions at i+1/2.
    const double c0 = (2.0 * f0 - 7.0 * f1 + 11.0 * f2) / 6.0;
    const double c1 = (-f1 + 5.0 * f2 + 2.0 * f3) / 6.0;
    const double c2 = (2.0 * f2 + 5.0 * f3 - f4) / 6.0;

    // Smoothness indicators: scaled L2 norms of the candidate interpolant
    // derivatives over the center cell (quadratics in the stencil values).
    const double is0 = 13.0 / 12.0 * sq(f0 - 2.0 * f1 + f2) + 0.25 * sq(f0 - 4.0 * f1 + 3.0 * f2);
    const double is1 = 13.0 / 12.0 * sq(f1 - 2.0 * f2 + f3) + 0.25 * sq(f1 - f3);
    const double is2 = 13.0 / 12.0 * sq(f2 - 2.0 * f3 + f4) + 0.25 * sq(3.0 * f2 - 4.0 * f3 + f4);

    double alpha[3];
    const double is[3] = {is0, is1, is2};
    for (int k = 0; k < 3; ++k) {
        double denom = params.epsilon + is[k];
        double dp = denom;
        for (int p = 1; p < params.power; ++p) dp *= denom;
        alpha[k] = kOptimal[k] / dp;
    }
    const double asum = alpha[0] + alpha[1] + alpha[2];
    const double w0 = alpha[0] / asum, w1 = alpha[1] / asum, w2 = alpha[2] / asum;

    if (ws) {
        ws->candidates[0] = c0;
        ws->candidates[1] = c1;
        ws->candidates[2] = c2;
        ws->smoothness[0] = is0;
        ws->smoothness[1] = is1;
        ws->smoothness[2] = is2;
        ws->weights[0] = w0;
        ws->weights[1] = w1;
        ws->weights[2] = w2;
    }
    return w0 * c0 + w1 * c1 + w2 * c2;
}

void weno_rhs_burgers(std::span<const double> u, double diffusion,
                      std::span<const double> forcing, double dx, std::span<double> out,
                      const WenoParams& params) {
    const int n = static_cast<int>(u.size());
    require(dx > 0.0, "dx must be positive");
    require(out.size() == u.size(), "output size mismatch");
    require(forcing.empty() || forcing.size() == u.size(), "forcing size mismatch");

    // alpha = max |f'(u)| = max |2u|
    double alpha = 0.0;
    for (double v : u) alpha = std::max(alpha, std::fabs(2.0 * v));

    static thread_local std::vector<double> fplus, fminus;
    fplus.resize(n);
    fminus.resize(n);
    for (int i = 0; i < n; ++i) {
        const double flux = u[i] * u[i];
        fplus[i] = 0.5 * (flux + alpha * u[i]);
        fminus[i] = 0.5 * (flux - alpha * u[i]);
    }

    for (int i = 0; i < n; ++i) out[i] = forcing.empty() ? 0.0 : forcing[i];
    flux_divergence(fplus, fminus, dx, params, out);

    if (diffusion > 0.0) {
        static const FdStencil second = fd_weights(2, 2, std::array<int, 3>{-1, 0, 1});
        for (int i = 0; i < n; ++i) out[i] += diffusion * second.apply(u, i, dx);
    }
}

void weno_rhs_advection(std::span<const double> u, double speed, double dx,
                        std::span<double> out, const WenoParams& params) {
    const int n = static_cast<int>(u.size());
    require(dx > 0.0, "dx must be positive");
    require(out.size() == u.size(), "output size mismatch");

    const double alpha = std::fabs(speed);
    static thread_local std::vector<double> fplus, fminus;
    fplus.resize(n);
    fminus.resize(n);
    for (int i = 0; i < n; ++i) {
        fplus[i] = 0.5 * (speed + alpha) * u[i];
        fminus[i] = 0.5 * (speed - alpha) * u[i];
    }
    for (int i = 0; i < n; ++i) out[i] = 0.0;
    flux_divergence(fplus, fminus, dx, params, out);
}

}  // namespace stencilnet

#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "stencilnet/common.hpp"
#include "stencilnet/grid.hpp"

namespace stencilnet {

using Spectrum = std::vector<std::complex<double>>;  // r2c half-spectrum, size n/2+1

/// Cached-plan real FFT pair for one size. forward() returns the plain
/// (unnormalized) DFT sums; inverse() divides by n, so inverse(forward(u)) == u
/// up to rounding.
class Dft {
public:
    explicit Dft(int n);
    ~Dft();
    Dft(const Dft&) = delete;
    Dft& operator=(const Dft&) = delete;

    int size() const { return n_; }
    void forward(std::span<const double> u, Spectrum& out);
    void inverse(std::span<const std::complex<double>> spectrum, std::vector<double>& out);

private:
    struct Impl;
    int n_;
    std::unique_ptr<Impl> impl_;
};

/// Evaluates N(u_hat) into out.
using SpectralNonlinearFn = std::function<void(std::span<const std::complex<double>>, Spectrum&)>;

/// Diagonal-linear + nonlinear split du_hat/dt = L u_hat + N(u_hat).
struct SpectralProblem {
    Spectrum linear_symbol;      // size n/2+1
    SpectralNonlinearFn nonlinear;  // may be empty (pure linear)
    int n = 0;                   // physical grid size
};

/// -d/dx(u^2) evaluated pseudo-spectrally with 3/2-rule zero padding, shared
/// by the KS and KdV setups.
class QuadraticFluxNonlinearity {
public:
    QuadraticFluxNonlinearity(int n, double length);
    void operator()(std::span<const std::complex<double>> u_hat, Spectrum& out);

private:
    int n_, padded_;
    double length_;
    std::shared_ptr<Dft> fine_;
    Spectrum padded_spec_;
    std::vector<double> padded_real_;
};

/// u_t + d(u^2)/dx + u_xx + u_xxxx = 0.
SpectralProblem make_ks_problem(const Grid& g);
/// u_t + d(u^2)/dx + delta u_xxx = 0.
SpectralProblem make_kdv_problem(const Grid& g, double dispersion);

/// Fourth-order stiff integrator with phi-coefficients evaluated by contour
/// averaging (32 points on a unit circle around each dt*lambda), stable near
/// zero eigenvalues.
class Etdrk4 {
public:
    Etdrk4(SpectralProblem problem, double dt);
    void step(Spectrum& u_hat);
    double dt() const { return dt_; }

private:
    SpectralProblem prob_;
    double dt_;
    Spectrum e_, e2_, q_, f1_, f2_, f3_;
    Spectrum nv_, a_, na_, b_, nb_, c_, nc_;
};

/// Single-step functional form used by tests.
Spectrum spectral_step_etdrk4(const Spectrum& u_hat, const Spectrum& linear_symbol,
                              const SpectralNonlinearFn& nonlinear, double dt);

}  // namespace stencilnet

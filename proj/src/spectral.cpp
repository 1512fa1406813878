#include "stencilnet/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

namespace stencilnet {

namespace {
// FFTW plan creation is not thread-safe.
std::mutex fftw_mutex;
}  // namespace

struct Dft::Impl {
    std::vector<double> real;
    std::vector<std::complex<double>> cplx;
    fftw_plan fwd = nullptr;
    fftw_plan inv = nullptr;
};

Dft::Dft(int n) : n_(n), impl_(std::make_unique<Impl>()) {
    require(n >= 4 && n % 2 == 0, "fft size must be even and >= 4");
    impl_->real.resize(n);
    impl_->cplx.resize(n / 2 + 1);
    std::lock_guard lock(fftw_mutex);
    // FFTW_ESTIMATE keeps plan choice deterministic.
    impl_->fwd = fftw_plan_dft_r2c_1d(n, impl_->real.data(),
                                      reinterpret_cast<fftw_complex*>(impl_->cplx.data()),
                                      FFTW_ESTIMATE);
    impl_->inv = fftw_plan_dft_c2r_1d(n, reinterpret_cast<fftw_complex*>(impl_->cplx.data()),
                                      impl_->real.data(), FFTW_ESTIMATE);
}

Dft::~Dft() {
    std::lock_guard lock(fftw_mutex);
    if (impl_->fwd) fftw_destroy_plan(impl_->fwd);
    if (impl_->inv) fftw_destroy_plan(impl_->inv);
}

void Dft::forward(std::span<const double> u, Spectrum& out) {
    require(static_cast<int>(u.size()) == n_, "fft input size mismatch");
    std::copy(u.begin(), u.end(), impl_->real.begin());
    fftw_execute(impl_->fwd);
    out.assign(impl_->cplx.begin(), impl_->cplx.end());
}

void Dft::inverse(std::span<const std::complex<double>> spectrum, std::vector<double>& out) {
    require(static_cast<int>(spectrum.size()) == n_ / 2 + 1, "spectrum size mismatch");
    std::copy(spectrum.begin(), spectrum.end(), impl_->cplx.begin());
    fftw_execute(impl_->inv);
    out.resize(n_);
    const double inv_n = 1.0 / n_;
    for (int i = 0; i < n_; ++i) out[i] = impl_->real[i] * inv_n;
}

QuadraticFluxNonlinearity::QuadraticFluxNonlinearity(int n, double length)
    : n_(n), padded_(3 * n / 2), length_(length), fine_(std::make_shared<Dft>(padded_)) {
    require(n % 2 == 0, "grid size must be even");
}

void QuadraticFluxNonlinearity::operator()(std::span<const std::complex<double>> u_hat,
                                           Spectrum& out) {
    const int half = n_ / 2;
    // Zero-pad to 3/2 resolution (amplitudes scale with grid size for
    // unnormalized spectra), square in physical space, truncate back.
    padded_spec_.assign(padded_ / 2 + 1, {0.0, 0.0});
    const double up = static_cast<double>(padded_) / n_;
    for (int k = 0; k < half; ++k) padded_spec_[k] = u_hat[k] * up;
    // Nyquist mode dropped: its derivative is sign-ambiguous on the grid.
    fine_->inverse(padded_spec_, padded_real_);
    for (double& v : padded_real_) v = v * v;
    fine_->forward(padded_real_, padded_spec_);

    out.assign(n_ / 2 + 1, {0.0, 0.0});
    const double down = static_cast<double>(n_) / padded_;
    const double k0 = 2.0 * std::numbers::pi / length_;
    for (int k = 0; k < half; ++k) {
        const std::complex<double> ik(0.0, k0 * k);
        out[k] = -ik * (padded_spec_[k] * down);
    }
}

SpectralProblem make_ks_problem(const Grid& g) {
    SpectralProblem p;
    p.n = g.n_points;
    const double k0 = 2.0 * std::numbers::pi / g.length;
    p.linear_symbol.resize(g.n_points / 2 + 1);
    for (int k = 0; k <= g.n_points / 2; ++k) {
        const double kk = k0 * k;
        p.linear_symbol[k] = {kk * kk - kk * kk * kk * kk, 0.0};
    }
    p.nonlinear = QuadraticFluxNonlinearity(g.n_points, g.length);
    return p;
}

SpectralProblem make_kdv_problem(const Grid& g, double dispersion) {
    SpectralProblem p;
    p.n = g.n_points;
    const double k0 = 2.0 * std::numbers::pi / g.length;
    p.linear_symbol.resize(g.n_points / 2 + 1);
    for (int k = 0; k <= g.n_points / 2; ++k) {
        const double kk = k0 * k;
        // -delta * (ik)^3 = i delta k^3
        p.linear_symbol[k] = {0.0, dispersion * kk * kk * kk};
    }
    p.nonlinear = QuadraticFluxNonlinearity(g.n_points, g.length);
    return p;
}

Etdrk4::Etdrk4(SpectralProblem problem, double dt) : prob_(std::move(problem)), dt_(dt) {
    require(dt > 0.0, "etdrk4 step size must be positive");
    const size_t n = prob_.linear_symbol.size();
    require(n > 0, "empty linear symbol");

    e_.resize(n);
    e2_.resize(n);
    q_.resize(n);
    f1_.resize(n);
    f2_.resize(n);
    f3_.resize(n);

    constexpr int kContourPoints = 32;
    for (size_t j = 0; j < n; ++j) {
        const std::complex<double> z = dt * prob_.linear_symbol[j];
        e_[j] = std::exp(z);
        e2_[j] = std::exp(0.5 * z);
        std::complex<double> q{}, f1{}, f2{}, f3{};
        for (int m = 0; m < kContourPoints; ++m) {
            const double theta =
                2.0 * std::numbers::pi * (m + 0.5) / kContourPoints;
            const std::complex<double> s = z + std::polar(1.0, theta);
            const std::complex<double> es = std::exp(s);
            const std::complex<double> s2 = s * s, s3 = s2 * s;
            q += (std::exp(0.5 * s) - 1.0) / s;
            f1 += (-4.0 - s + es * (4.0 - 3.0 * s + s2)) / s3;
            f2 += (2.0 + s + es * (-2.0 + s)) / s3;
            f3 += (-4.0 - 3.0 * s - s2 + es * (4.0 - s)) / s3;
        }
        const double scale = dt / kContourPoints;
        q_[j] = q * scale;
        f1_[j] = f1 * scale;
        f2_[j] = f2 * scale;
        f3_[j] = f3 * scale;
    }
}

void Etdrk4::step(Spectrum& v) {
    const size_t n = v.size();
    require(n == prob_.linear_symbol.size(), "spectrum/symbol size mismatch");
    for (auto& z : v) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw numerical_error("etdrk4: non-finite spectrum");
    }

    auto eval_nl = [&](const Spectrum& in, Spectrum& out) {
        if (prob_.nonlinear) {
            prob_.nonlinear(in, out);
        } else {
            out.assign(n, {0.0, 0.0});
        }
    };

    eval_nl(v, nv_);
    a_.resize(n);
    for (size_t j = 0; j < n; ++j) a_[j] = e2_[j] * v[j] + q_[j] * nv_[j];
    eval_nl(a_, na_);
    b_.resize(n);
    for (size_t j = 0; j < n; ++j) b_[j] = e2_[j] * v[j] + q_[j] * na_[j];
    eval_nl(b_, nb_);
    c_.resize(n);
    for (size_t j = 0; j < n; ++j) c_[j] = e2_[j] * a_[j] + q_[j] * (2.0 * nb_[j] - nv_[j]);
    eval_nl(c_, nc_);
    for (size_t j = 0; j < n; ++j)
        v[j] = e_[j] * v[j] + f1_[j] * nv_[j] + 2.0 * f2_[j] * (na_[j] + nb_[j]) + f3_[j] * nc_[j];
}

Spectrum spectral_step_etdrk4(const Spectrum& u_hat, const Spectrum& linear_symbol,
                              const SpectralNonlinearFn& nonlinear, double dt) {
    SpectralProblem p;
    p.linear_symbol = linear_symbol;
    p.nonlinear = nonlinear;
    p.n = static_cast<int>(2 * (linear_symbol.size() - 1));
    Etdrk4 stepper(std::move(p), dt);
    Spectrum v = u_hat;
    stepper.step(v);
    return v;
}

}  // namespace stencilnet

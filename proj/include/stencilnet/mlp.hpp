#pragma once

#include <span>
#include <vector>

#include "stencilnet/mat.hpp"
#include "stencilnet/rng.hpp"

namespace stencilnet {

inline double elu(double x) { return x > 0.0 ? x : std::exp(x) - 1.0; }
inline double elu_derivative(double x) { return x > 0.0 ? 1.0 : std::exp(x); }

/// Dense network parameters. Hidden layers use ELU; the output layer is
/// linear so the operator can take either sign.
struct MlpParams {
    struct Layer {
        Mat weight;                // out x in
        std::vector<double> bias;  // out
    };
    std::vector<Layer> layers;

    int input_width() const { return layers.front().weight.cols; }
    int output_width() const { return layers.back().weight.rows; }
    size_t parameter_count() const;
};

/// He-style uniform fan-in initialization: W ~ U(-sqrt(6/fan_in), +...), b = 0.
MlpParams make_mlp(std::span<const int> widths, CounterRng& rng);

double mlp_forward(const MlpParams& p, std::span<const double> patch);

/// Batched forward over rows of X (n x input_width) -> out (n x output_width).
/// Scratch grows as needed and is reused across calls.
struct MlpWorkspace {
    std::vector<Mat> act;
};
void mlp_forward_batch(const MlpParams& p, const Mat& x, Mat& out, MlpWorkspace& ws);

/// Flat views over all parameters, ordered (W_0, b_0, W_1, b_1, ...). Used by
/// the optimizer and the finite-difference checks.
std::vector<double> flatten_params(const MlpParams& p);
void unflatten_params(std::span<const double> flat, MlpParams& p);
double get_param(const MlpParams& p, size_t index);
void set_param(MlpParams& p, size_t index, double value);

}  // namespace stencilnet

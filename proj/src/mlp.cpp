#include "stencilnet/mlp.hpp"

#include <cmath>

#include "stencilnet/common.hpp"
#include "stencilnet/kernels.hpp"

namespace stencilnet {

size_t MlpParams::parameter_count() const {
    size_t n = 0;
    for (const auto& l : layers) n += l.weight.size() + l.bias.size();
    return n;
}

MlpParams make_mlp(std::span<const int> widths, CounterRng& rng) {
    require(widths.size() >= 2, "network needs at least input and output widths");
    MlpParams p;
    for (size_t q = 0; q + 1 < widths.size(); ++q) {
        const int fan_in = widths[q];
        const int fan_out = widths[q + 1];
        require(fan_in > 0 && fan_out > 0, "layer widths must be positive");
        MlpParams::Layer layer;
        layer.weight.reshape(fan_out, fan_in);
        const double bound = std::sqrt(6.0 / fan_in);
        for (auto& w : layer.weight.a) w = rng.uniform(-bound, bound);
        layer.bias.assign(fan_out, 0.0);
        p.layers.push_back(std::move(layer));
    }
    return p;
}

void mlp_forward_batch(const MlpParams& p, const Mat& x, Mat& out, MlpWorkspace& ws) {
    require(!p.layers.empty(), "empty network");
    require(x.cols == p.input_width(), "patch width does not match network input");

    const size_t n_layers = p.layers.size();
    ws.act.resize(n_layers);
    const Mat* cur = &x;
    for (size_t q = 0; q < n_layers; ++q) {
        const auto& layer = p.layers[q];
        Mat& next = (q + 1 == n_layers) ? out : ws.act[q];
        next.reshape(cur->rows, layer.weight.rows);
        kernels::gemm_nt(cur->rows, layer.weight.rows, layer.weight.cols, cur->data(),
                         layer.weight.data(), next.data());
        for (int i = 0; i < next.rows; ++i) {
            double* row = next.data() + static_cast<size_t>(i) * next.cols;
            for (int j = 0; j < next.cols; ++j) row[j] += layer.bias[j];
        }
        if (q + 1 < n_layers) {
            for (auto& v : next.a) v = elu(v);
        }
        cur = &next;
    }
}

double mlp_forward(const MlpParams& p, std::span<const double> patch) {
    require(static_cast<int>(patch.size()) == p.input_width(),
            "patch width does not match network input");
    require(p.output_width() == 1, "mlp_forward expects a scalar-output network");
    static thread_local MlpWorkspace ws;
    static thread_local Mat x, y;
    x.reshape(1, static_cast<int>(patch.size()));
    std::copy(patch.begin(), patch.end(), x.a.begin());
    mlp_forward_batch(p, x, y, ws);
    return y.a[0];
}

std::vector<double> flatten_params(const MlpParams& p) {
    std::vector<double> flat;
    flat.reserve(p.parameter_count());
    for (const auto& l : p.layers) {
        flat.insert(flat.end(), l.weight.a.begin(), l.weight.a.end());
        flat.insert(flat.end(), l.bias.begin(), l.bias.end());
    }
    return flat;
}

void unflatten_params(std::span<const double> flat, MlpParams& p) {
    require(flat.size() == p.parameter_count(), "flat parameter size mismatch");
    size_t off = 0;
    for (auto& l : p.layers) {
        std::copy(flat.begin() + off, flat.begin() + off + l.weight.size(), l.weight.a.begin());
        off += l.weight.size();
        std::copy(flat.begin() + off, flat.begin() + off + l.bias.size(), l.bias.begin());
        off += l.bias.size();
    }
}

double get_param(const MlpParams& p, size_t index) {
    for (const auto& l : p.layers) {
        if (index < l.weight.size()) return l.weight.a[index];
        index -= l.weight.size();
        if (index < l.bias.size()) return l.bias[index];
        index -= l.bias.size();
    }
    throw std::invalid_argument("parameter index out of range");
}

void set_param(MlpParams& p, size_t index, double value) {
    for (auto& l : p.layers) {
        if (index < l.weight.size()) {
            l.weight.a[index] = value;
            return;
        }
        index -= l.weight.size();
        if (index < l.bias.size()) {
            l.bias[index] = value;
            return;
        }
        index -= l.bias.size();
    }
    throw std::invalid_argument("parameter index out of range");
}

}  // namespace stencilnet

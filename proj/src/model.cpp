#include "stencilnet/model.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "stencilnet/common.hpp"
#include "stencilnet/io.hpp"
#include "stencilnet/kernels.hpp"
#include "stencilnet/time_integration.hpp"

namespace stencilnet {

namespace {

constexpr double kBlowupThreshold = 1e6;
constexpr uint32_t kCheckpointVersion = 1;

struct OperatorWorkspace {
    Mat patches, out;
    MlpWorkspace mlp;
};

void gather_patches(std::span<const double> u, int m, Mat& patches) {
    const int n = static_cast<int>(u.size());
    patches.reshape(n, 2 * m + 1);
    for (int i = 0; i < n; ++i) {
        double* row = patches.data() + static_cast<size_t>(i) * patches.cols;
        for (int c = -m; c <= m; ++c) {
            int j = i + c;
            if (j < 0) j += n;
            if (j >= n) j -= n;
            row[c + m] = u[j];
        }
    }
}

void apply_operator_ws(const StencilNetModel& model, std::span<const double> u,
                       std::span<double> out, OperatorWorkspace& ws) {
    require(static_cast<int>(u.size()) >= 2 * model.radius + 1, "field narrower than stencil");
    require(model.params.input_width() == 2 * model.radius + 1,
            "network input width does not match stencil radius");
    require(out.size() == u.size(), "operator output size mismatch");
    gather_patches(u, model.radius, ws.patches);
    mlp_forward_batch(model.params, ws.patches, ws.out, ws.mlp);
    for (size_t i = 0; i < u.size(); ++i) out[i] = ws.out.a[i];
}

}  // namespace

void apply_operator(const StencilNetModel& model, std::span<const double> u,
                    std::span<double> out) {
    static thread_local OperatorWorkspace ws;
    apply_operator_ws(model, u, out, ws);
}

Field apply_operator(const StencilNetModel& model, const Field& u) {
    Field out(u.size());
    apply_operator(model, u, out);
    return out;
}

std::vector<Field> rollout_k(const StencilNetModel& model, const Field& u0, int k,
                             const RolloutForcing* forcing, double t0) {
    require(k != 0, "rollout needs a non-zero step count");
    const double dt = k > 0 ? model.trained_dt : -model.trained_dt;
    require(model.trained_dt > 0.0, "model has no training step size");
    if (forcing)
        require(forcing->positions.size() == u0.size(), "forcing positions size mismatch");

    std::vector<double> fbuf;
    RhsFn rhs = [&](std::span<const double> u, double t, std::span<double> out) {
        apply_operator(model, u, out);
        if (forcing) {
            fbuf.resize(u.size());
            eval_forcing(forcing->params, forcing->positions, t, fbuf);
            for (size_t i = 0; i < u.size(); ++i) out[i] += fbuf[i];
        }
    };

    std::vector<Field> states;
    Field u = u0, next(u0.size());
    for (int s = 0; s < std::abs(k); ++s) {
        try {
            rk3_tvd_step(u, t0 + s * dt, dt, rhs, next);
        } catch (const numerical_error& e) {
            throw numerical_error("rollout step " + std::to_string(s + 1) + ": " + e.what());
        }
        if (max_abs(next) > kBlowupThreshold)
            throw numerical_error("rollout blow-up at step " + std::to_string(s + 1));
        u = next;
        states.push_back(u);
    }
    return states;
}

Trajectory predict(const StencilNetModel& model, const Grid& grid, const Field& u0, int n_steps,
                   const RolloutForcing* forcing, double t0) {
    require(static_cast<int>(u0.size()) == grid.n_points, "initial condition size mismatch");
    require(n_steps >= 1, "prediction needs at least one step");
    Trajectory traj = make_trajectory(grid, model.trained_dt, n_steps + 1);
    std::copy(u0.begin(), u0.end(), traj.row(0).begin());
    Field u = u0;
    auto states = rollout_k(model, u0, n_steps, forcing, t0);
    for (int s = 0; s < n_steps; ++s)
        std::copy(states[s].begin(), states[s].end(), traj.row(s + 1).begin());
    return traj;
}

namespace {

void put_u32(std::ostream& os, uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 4);
}

uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(b[i]) << (8 * i);
    return v;
}

void put_f64(std::ostream& os, double v) {
    uint64_t bits;
    std::memcpy(&bits, &v, 8);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(bits >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 8);
}

double get_f64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= static_cast<uint64_t>(b[i]) << (8 * i);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

}  // namespace

void save_checkpoint(const std::string& path, const StencilNetModel& model) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw io_error("cannot open for writing: " + path);
    os.write("STNM", 4);
    put_u32(os, kCheckpointVersion);
    put_u32(os, static_cast<uint32_t>(model.radius));
    put_u32(os, static_cast<uint32_t>(model.params.layers.size()));
    for (const auto& layer : model.params.layers) {
        put_u32(os, static_cast<uint32_t>(layer.weight.rows));
        put_u32(os, static_cast<uint32_t>(layer.weight.cols));
        for (double w : layer.weight.a) put_f64(os, w);
        for (double b : layer.bias) put_f64(os, b);
    }
    put_f64(os, model.trained_dx);
    put_f64(os, model.trained_dt);
    if (!os) throw io_error("checkpoint write failed: " + path);
}

StencilNetModel load_checkpoint(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw io_error("cannot open: " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "STNM", 4) != 0)
        throw io_error("not an STNM checkpoint: " + path);
    const uint32_t version = get_u32(is);
    if (version != kCheckpointVersion)
        throw io_error("unsupported checkpoint version: " + std::to_string(version));
    StencilNetModel model;
    model.radius = static_cast<int>(get_u32(is));
    const uint32_t n_layers = get_u32(is);
    if (!is || n_layers == 0 || n_layers > 64) throw io_error("corrupt checkpoint: " + path);
    model.params.layers.resize(n_layers);
    for (auto& layer : model.params.layers) {
        const int rows = static_cast<int>(get_u32(is));
        const int cols = static_cast<int>(get_u32(is));
        if (!is || rows <= 0 || cols <= 0) throw io_error("corrupt checkpoint layer: " + path);
        layer.weight.reshape(rows, cols);
        for (auto& w : layer.weight.a) w = get_f64(is);
        layer.bias.resize(rows);
        for (auto& b : layer.bias) b = get_f64(is);
    }
    model.trained_dx = get_f64(is);
    model.trained_dt = get_f64(is);
    if (!is) throw io_error("truncated checkpoint: " + path);
    return model;
}

namespace ad {

TapedMlp tape_mlp(Tape& tape, const MlpParams& params, int radius) {
    TapedMlp tm;
    tm.radius = radius;
    for (const auto& layer : params.layers) {
        Mat bias(1, static_cast<int>(layer.bias.size()));
        std::copy(layer.bias.begin(), layer.bias.end(), bias.a.begin());
        tm.layers.push_back({tape.leaf(layer.weight), tape.leaf(bias)});
    }
    return tm;
}

ValueId taped_apply_operator(Tape& tape, const TapedMlp& mlp, ValueId u) {
    ValueId x = tape.gather(u, mlp.radius);
    for (size_t q = 0; q < mlp.layers.size(); ++q) {
        x = tape.affine(mlp.layers[q].weight, mlp.layers[q].bias, x);
        if (q + 1 < mlp.layers.size()) x = tape.elu(x);
    }
    return x;  // n x 1
}

ValueId taped_rk3_step(Tape& tape, const TapedMlp& mlp, ValueId u, double t, double dt,
                       const RolloutForcing* forcing) {
    auto rhs = [&](ValueId state, double stage_t) {
        ValueId f = taped_apply_operator(tape, mlp, state);
        if (forcing) {
            Mat fc(tape.value(state).rows, 1);
            eval_forcing(forcing->params, forcing->positions, stage_t, fc.a);
            f = tape.add(f, tape.constant(fc));
        }
        return f;
    };
    ValueId s1 = tape.axpy(dt, rhs(u, t), u);
    ValueId s2 = tape.blend(0.75, u, 0.25, tape.axpy(dt, rhs(s1, t + dt), s1));
    return tape.blend(1.0 / 3.0, u, 2.0 / 3.0, tape.axpy(dt, rhs(s2, t + 0.5 * dt), s2));
}

void accumulate_param_gradients(const Tape& tape, const TapedMlp& mlp,
                                std::span<double> flat_grads) {
    size_t off = 0;
    for (const auto& layer : mlp.layers) {
        const Mat& gw = tape.gradient(layer.weight);
        for (size_t i = 0; i < gw.size(); ++i) flat_grads[off + i] += gw.a[i];
        off += gw.size();
        const Mat& gb = tape.gradient(layer.bias);
        for (size_t i = 0; i < gb.size(); ++i) flat_grads[off + i] += gb.a[i];
        off += gb.size();
    }
    require(off == flat_grads.size(), "gradient buffer size mismatch");
}

}  // namespace ad

}  // namespace stencilnet

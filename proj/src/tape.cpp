#include "stencilnet/tape.hpp"

#include "stencilnet/common.hpp"
#include "stencilnet/kernels.hpp"
#include "stencilnet/mlp.hpp"
#include "stencilnet/time_integration.hpp"

namespace stencilnet::ad {

ValueId Tape::new_value(int rows, int cols) {
    if (used_ == static_cast<int>(vals_.size())) vals_.emplace_back();
    vals_[used_].reshape(rows, cols);
    return used_++;
}

ValueId Tape::leaf(const Mat& v) {
    ValueId id = new_value(v.rows, v.cols);
    vals_[id].a = v.a;
    nodes_.push_back({Op::input, -1, -1, -1, id, 0.0, 0.0, 0});
    return id;
}

ValueId Tape::constant(const Mat& v) {
    // Constants are inputs whose gradients are simply never read.
    return leaf(v);
}

#define STN_BINARY_BUILDER(name)                                                  \
    ValueId Tape::name(ValueId a, ValueId b) {                                    \
        require(vals_[a].rows == vals_[b].rows && vals_[a].cols == vals_[b].cols, \
                "tape: shape mismatch in " #name);                                \
        ValueId id = new_value(vals_[a].rows, vals_[a].cols);                     \
        Node n{Op::name, a, b, -1, id, 0.0, 0.0, 0};                              \
        exec(n);                                                                  \
        nodes_.push_back(n);                                                      \
        return id;                                                                \
    }

STN_BINARY_BUILDER(add)
STN_BINARY_BUILDER(sub)
STN_BINARY_BUILDER(mul)
#undef STN_BINARY_BUILDER

ValueId Tape::affine(ValueId w, ValueId bias, ValueId x) {
    const Mat& wm = vals_[w];
    const Mat& xm = vals_[x];
    require(xm.cols == wm.cols, "tape: affine input width mismatch");
    require(vals_[bias].rows == 1 && vals_[bias].cols == wm.rows,
            "tape: affine bias must be 1 x out");
    ValueId id = new_value(xm.rows, wm.rows);
    Node n{Op::affine, w, bias, x, id, 0.0, 0.0, 0};
    exec(n);
    nodes_.push_back(n);
    return id;
}

ValueId Tape::elu(ValueId x) {
    ValueId id = new_value(vals_[x].rows, vals_[x].cols);
    Node n{Op::elu, x, -1, -1, id, 0.0, 0.0, 0};
    exec(n);
    nodes_.push_back(n);
    return id;
}

ValueId Tape::scale(double alpha, ValueId a) {
    ValueId id = new_value(vals_[a].rows, vals_[a].cols);
    Node n{Op::scale, a, -1, -1, id, alpha, 0.0, 0};
    exec(n);
    nodes_.push_back(n);
    return id;
}

ValueId Tape::axpy(double alpha, ValueId a, ValueId b) {
    require(vals_[a].rows == vals_[b].rows && vals_[a].cols == vals_[b].cols,
            "tape: shape mismatch in axpy");
    ValueId id = new_value(vals_[a].rows, vals_[a].cols);
    Node n{Op::axpy, a, b, -1, id, alpha, 0.0, 0};
    exec(n);
    nodes_.push_back(n);
    return id;
}

ValueId Tape::blend(double alpha, ValueId a, double beta, ValueId b) {
    require(vals_[a].rows == vals_[b].rows && vals_[a].cols == vals_[b].cols,
            "tape: shape mismatch in blend");
    ValueId id = new_value(vals_[a].rows, vals_[a].cols);
    Node n{Op::blend, a, b, -1, id, alpha, beta, 0};
    exec(n);
    nodes_.push_back(n);
    return id;
}

ValueId Tape::square(ValueId a) {
    ValueId id = new_value(vals_[a].rows, vals_[a].cols);
    Node n{Op::square, a, -1, -1, id, 0.0, 0.0, 0};
    exec(n);
    nodes_.push_back(n);
    return id;
}

ValueId Tape::sum(ValueId a) {
    ValueId id = new_value(1, 1);
    Node n{Op::sum, a, -1, -1, id, 0.0, 0.0, 0};
    exec(n);
    nodes_.push_back(n);
    return id;
}

ValueId Tape::gather(ValueId field, int radius) {
    const Mat& f = vals_[field];
    require(f.cols == 1, "tape: gather expects an n x 1 field");
    require(2 * radius + 1 <= f.rows, "tape: stencil wider than grid");
    ValueId id = new_value(f.rows, 2 * radius + 1);
    Node n{Op::gather, field, -1, -1, id, 0.0, 0.0, radius};
    exec(n);
    nodes_.push_back(n);
    return id;
}

void Tape::exec(const Node& n) {
    Mat& out = vals_[n.out];
    switch (n.op) {
        case Op::input:
            break;
        case Op::affine: {
            const Mat& w = vals_[n.a];
            const Mat& bias = vals_[n.b];
            const Mat& x = vals_[n.c];
            kernels::gemm_nt(x.rows, w.rows, w.cols, x.data(), w.data(), out.data());
            for (int i = 0; i < out.rows; ++i) {
                double* row = out.data() + static_cast<size_t>(i) * out.cols;
                for (int j = 0; j < out.cols; ++j) row[j] += bias.a[j];
            }
            break;
        }
        case Op::elu: {
            const Mat& x = vals_[n.a];
            for (size_t i = 0; i < x.size(); ++i) out.a[i] = stencilnet::elu(x.a[i]);
            break;
        }
        case Op::add: {
            const Mat& a = vals_[n.a];
            const Mat& b = vals_[n.b];
            for (size_t i = 0; i < a.size(); ++i) out.a[i] = a.a[i] + b.a[i];
            break;
        }
        case Op::sub: {
            const Mat& a = vals_[n.a];
            const Mat& b = vals_[n.b];
            for (size_t i = 0; i < a.size(); ++i) out.a[i] = a.a[i] - b.a[i];
            break;
        }
        case Op::mul: {
            const Mat& a = vals_[n.a];
            const Mat& b = vals_[n.b];
            for (size_t i = 0; i < a.size(); ++i) out.a[i] = a.a[i] * b.a[i];
            break;
        }
        case Op::scale: {
            const Mat& a = vals_[n.a];
            for (size_t i = 0; i < a.size(); ++i) out.a[i] = n.alpha * a.a[i];
            break;
        }
        case Op::axpy: {
            const Mat& a = vals_[n.a];
            const Mat& b = vals_[n.b];
            for (size_t i = 0; i < a.size(); ++i)
                out.a[i] = rk3_detail::euler(n.alpha, a.a[i], b.a[i]);
            break;
        }
        case Op::blend: {
            const Mat& a = vals_[n.a];
            const Mat& b = vals_[n.b];
            for (size_t i = 0; i < a.size(); ++i)
                out.a[i] = rk3_detail::blend(n.alpha, a.a[i], n.beta, b.a[i]);
            break;
        }
        case Op::square: {
            const Mat& a = vals_[n.a];
            for (size_t i = 0; i < a.size(); ++i) out.a[i] = a.a[i] * a.a[i];
            break;
        }
        case Op::sum: {
            const Mat& a = vals_[n.a];
            out.a[0] = pairwise_sum(a.a);
            break;
        }
        case Op::gather: {
            const Mat& f = vals_[n.a];
            const int nn = f.rows;
            const int m = n.radius;
            for (int i = 0; i < nn; ++i) {
                double* row = out.data() + static_cast<size_t>(i) * out.cols;
                for (int c = -m; c <= m; ++c) {
                    int j = i + c;
                    if (j < 0) j += nn;
                    if (j >= nn) j -= nn;
                    row[c + m] = f.a[j];
                }
            }
            break;
        }
    }
}

void Tape::forward_replay() {
    for (const Node& n : nodes_) exec(n);
}

void Tape::backward(ValueId scalar_output) {
    require(vals_[scalar_output].size() == 1, "backward expects a scalar output");

    grads_.resize(vals_.size());
    for (int i = 0; i < used_; ++i) {
        grads_[i].reshape(vals_[i].rows, vals_[i].cols);
        grads_[i].fill(0.0);
    }
    grads_[scalar_output].a[0] = 1.0;

    for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it) {
        const Node& n = *it;
        const Mat& gout = grads_[n.out];
        switch (n.op) {
            case Op::input:
                break;
            case Op::affine: {
                const Mat& w = vals_[n.a];
                const Mat& x = vals_[n.c];
                Mat& gw = grads_[n.a];
                Mat& gb = grads_[n.b];
                Mat& gx = grads_[n.c];
                // dW += dY^T X ; dX += dY W ; db += column sums of dY
                kernels::gemm_tn(x.rows, w.rows, w.cols, gout.data(), x.data(), gw.data(), true);
                kernels::gemm_nn(x.rows, w.rows, w.cols, gout.data(), w.data(), gx.data(), true);
                for (int i = 0; i < gout.rows; ++i) {
                    const double* row = gout.data() + static_cast<size_t>(i) * gout.cols;
                    for (int j = 0; j < gout.cols; ++j) gb.a[j] += row[j];
                }
                break;
            }
            case Op::elu: {
                const Mat& x = vals_[n.a];
                Mat& gx = grads_[n.a];
                for (size_t i = 0; i < x.size(); ++i)
                    gx.a[i] += gout.a[i] * elu_derivative(x.a[i]);
                break;
            }
            case Op::add: {
                Mat& ga = grads_[n.a];
                Mat& gb = grads_[n.b];
                for (size_t i = 0; i < gout.size(); ++i) {
                    ga.a[i] += gout.a[i];
                    gb.a[i] += gout.a[i];
                }
                break;
            }
            case Op::sub: {
                Mat& ga = grads_[n.a];
                Mat& gb = grads_[n.b];
                for (size_t i = 0; i < gout.size(); ++i) {
                    ga.a[i] += gout.a[i];
                    gb.a[i] -= gout.a[i];
                }
                break;
            }
            case Op::mul: {
                const Mat& a = vals_[n.a];
                const Mat& b = vals_[n.b];
                Mat& ga = grads_[n.a];
                Mat& gb = grads_[n.b];
                for (size_t i = 0; i < gout.size(); ++i) {
                    ga.a[i] += gout.a[i] * b.a[i];
                    gb.a[i] += gout.a[i] * a.a[i];
                }
                break;
            }
            case Op::scale: {
                Mat& ga = grads_[n.a];
                for (size_t i = 0; i < gout.size(); ++i) ga.a[i] += n.alpha * gout.a[i];
                break;
            }
            case Op::axpy: {
                Mat& ga = grads_[n.a];
                Mat& gb = grads_[n.b];
                for (size_t i = 0; i < gout.size(); ++i) {
                    ga.a[i] += n.alpha * gout.a[i];
                    gb.a[i] += gout.a[i];
                }
                break;
            }
            case Op::blend: {
                Mat& ga = grads_[n.a];
                Mat& gb = grads_[n.b];
                for (size_t i = 0; i < gout.size(); ++i) {
                    ga.a[i] += n.alpha * gout.a[i];
                    gb.a[i] += n.beta * gout.a[i];
                }
                break;
            }
            case Op::square: {
                const Mat& a = vals_[n.a];
                Mat& ga = grads_[n.a];
                for (size_t i = 0; i < gout.size(); ++i)
                    ga.a[i] += 2.0 * a.a[i] * gout.a[i];
                break;
            }
            case Op::sum: {
                Mat& ga = grads_[n.a];
                const double g = gout.a[0];
                for (size_t i = 0; i < ga.size(); ++i) ga.a[i] += g;
                break;
            }
            case Op::gather: {
                Mat& gf = grads_[n.a];
                const int nn = gf.rows;
                const int m = n.radius;
                for (int i = 0; i < nn; ++i) {
                    const double* row = gout.data() + static_cast<size_t>(i) * gout.cols;
                    for (int c = -m; c <= m; ++c) {
                        int j = i + c;
                        if (j < 0) j += nn;
                        if (j >= nn) j -= nn;
                        gf.a[j] += row[c + m];
                    }
                }
                break;
            }
        }
    }
}

void Tape::reset() {
    nodes_.clear();
    used_ = 0;
}

}  // namespace stencilnet::ad

#pragma once

#include <span>
#include <vector>

#include "stencilnet/mat.hpp"

namespace stencilnet::ad {

using ValueId = int;

/// Reverse-mode tape over a fixed set of matrix primitives: the affine/ELU
/// chain of the sliding network, the elementwise algebra of the RK stages,
/// the periodic patch gather, and the squared-error reduction. Values are in
/// SSA form (each id written once), so one reverse sweep with accumulating
/// adjoints is exact. Recording executes eagerly; forward_replay() reruns the
/// same node list and reproduces every stored value bit-for-bit.
class Tape {
public:
    /// Gradient-tracked input.
    ValueId leaf(const Mat& v);
    /// Input that never receives a gradient (data rows, forcing fields).
    ValueId constant(const Mat& v);

    /// x (n x in) * w(out x in)^T + bias (1 x out, broadcast over rows).
    ValueId affine(ValueId w, ValueId bias, ValueId x);
    ValueId elu(ValueId x);
    ValueId add(ValueId a, ValueId b);
    ValueId sub(ValueId a, ValueId b);
    ValueId mul(ValueId a, ValueId b);
    ValueId scale(double alpha, ValueId a);
    /// alpha*a + b, elementwise (the forward-Euler building block).
    ValueId axpy(double alpha, ValueId a, ValueId b);
    /// alpha*a + beta*b, elementwise (the RK convex combination).
    ValueId blend(double alpha, ValueId a, double beta, ValueId b);
    ValueId square(ValueId a);
    /// Sum of all entries -> 1x1.
    ValueId sum(ValueId a);
    /// Periodic stencil gather: field (n x 1) -> patches (n x (2m+1)).
    ValueId gather(ValueId field, int radius);

    void backward(ValueId scalar_output);
    void forward_replay();

    const Mat& value(ValueId id) const { return vals_[id]; }
    /// Valid after backward().
    const Mat& gradient(ValueId id) const { return grads_[id]; }

    /// Drop all nodes but keep buffers for reuse; rebuilding an identically
    /// shaped graph allocates nothing.
    void reset();

    size_t node_count() const { return nodes_.size(); }

private:
    enum class Op {
        input,
        affine,
        elu,
        add,
        sub,
        mul,
        scale,
        axpy,
        blend,
        square,
        sum,
        gather
    };
    struct Node {
        Op op;
        int a = -1, b = -1, c = -1;
        int out = -1;
        double alpha = 0.0, beta = 0.0;
        int radius = 0;
    };

    ValueId new_value(int rows, int cols);
    void exec(const Node& n);

    std::vector<Node> nodes_;
    std::vector<Mat> vals_;
    std::vector<Mat> grads_;
    int used_ = 0;
};

}  // namespace stencilnet::ad

#pragma once

#include <span>
#include <vector>

#include "stencilnet/common.hpp"

namespace stencilnet {

/// Finite-difference stencil for the l-th derivative at accuracy order r.
/// Weights are in units of dx^{-l}: d^l u / dx^l |_i ~ sum_j w_j u_{i+o_j} / dx^l.
struct FdStencil {
    std::vector<int> offsets;
    std::vector<double> weights;
    int derivative_order = 0;  // l
    int accuracy_order = 0;    // r

    double apply(std::span<const double> field, int i, double dx) const;
};

/// Solve the moment conditions sum_j w_j o_j^k = k! [k == l], k = 0..l+r-1,
/// with exact rational elimination (offsets and right-hand sides are
/// integers, so the weights come out exact). Underdetermined systems take the
/// particular solution with free weights set to zero; an unsatisfiable system
/// throws numerical_error.
FdStencil fd_weights(int derivative_order, int accuracy_order, std::span<const int> offsets);

/// Residual of moment condition k for a computed stencil (should be ~0 for
/// every imposed k).
double moment_residual(const FdStencil& s, int k);

}  // namespace stencilnet

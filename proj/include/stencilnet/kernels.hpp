#pragma once

#include <string>

namespace stencilnet::kernels {

/// The dense inner loops (batched stencil-MLP layers and their adjoints) are
/// provided as scalar reference kernels plus an AVX2/FMA variant chosen at
/// runtime. Each row of the output is accumulated independently and in a
/// fixed element order, so results do not depend on the position of a row
/// within the batch (this is what makes the sliding operator exactly
/// translation equivariant).
///
///   gemm_nt: C = X * W^T (+C)   X: n x k, W: m x k, C: n x m
///   gemm_nn: C = A * B   (+C)   A: n x k, B: k x m, C: n x m
///   gemm_tn: C = A^T * B (+C)   A: k x n, B: k x m, C: n x m
///
/// gemm_nn / gemm_tn are element-order identical to the scalar kernels on any
/// backend; gemm_nt uses per-lane partial sums and agrees to rounding.
struct KernelTable {
    void (*gemm_nt)(int n, int m, int k, const double* X, const double* W, double* C, bool acc);
    void (*gemm_nn)(int n, int k, int m, const double* A, const double* B, double* C, bool acc);
    void (*gemm_tn)(int k, int n, int m, const double* A, const double* B, double* C, bool acc);
    const char* name;
};

extern const KernelTable scalar_table;
extern const KernelTable avx2_table;  // valid only if avx2_supported()

bool avx2_supported();

/// Active table (runtime-dispatched; override with force_backend or the
/// STENCILNET_KERNEL environment variable: "scalar", "avx2", "auto").
const KernelTable& active();
void force_backend(const std::string& name);
std::string backend_name();

inline void gemm_nt(int n, int m, int k, const double* X, const double* W, double* C,
                    bool acc = false) {
    active().gemm_nt(n, m, k, X, W, C, acc);
}
inline void gemm_nn(int n, int k, int m, const double* A, const double* B, double* C,
                    bool acc = false) {
    active().gemm_nn(n, k, m, A, B, C, acc);
}
inline void gemm_tn(int k, int n, int m, const double* A, const double* B, double* C,
                    bool acc = false) {
    active().gemm_tn(k, n, m, A, B, C, acc);
}

}  // namespace stencilnet::kernels

#include "stencilnet/kernels.hpp"

namespace stencilnet::kernels {

namespace {

// C[i,j] = sum_k X[i,k] * W[j,k]; plain running sum over k.
void gemm_nt_scalar(int n, int m, int k, const double* X, const double* W, double* C, bool acc) {
    for (int i = 0; i < n; ++i) {
        const double* x = X + static_cast<size_t>(i) * k;
        double* c = C + static_cast<size_t>(i) * m;
        for (int j = 0; j < m; ++j) {
            const double* w = W + static_cast<size_t>(j) * k;
            double s = 0.0;
            for (int p = 0; p < k; ++p) s += x[p] * w[p];
            c[j] = acc ? c[j] + s : s;
        }
    }
}

// C[i,j] = sum_p A[i,p] * B[p,j]; axpy over rows of B so each C element is a
// fixed-order running sum over p.
void gemm_nn_scalar(int n, int k, int m, const double* A, const double* B, double* C, bool acc) {
    for (int i = 0; i < n; ++i) {
        double* c = C + static_cast<size_t>(i) * m;
        if (!acc)
            for (int j = 0; j < m; ++j) c[j] = 0.0;
        const double* a = A + static_cast<size_t>(i) * k;
        for (int p = 0; p < k; ++p) {
            const double ap = a[p];
            const double* b = B + static_cast<size_t>(p) * m;
            for (int j = 0; j < m; ++j) c[j] += ap * b[j];
        }
    }
}

// C[i,j] = sum_p A[p,i] * B[p,j]   (A: k x n).
void gemm_tn_scalar(int k, int n, int m, const double* A, const double* B, double* C, bool acc) {
    if (!acc) {
        for (size_t t = 0; t < static_cast<size_t>(n) * m; ++t) C[t] = 0.0;
    }
    for (int p = 0; p < k; ++p) {
        const double* a = A + static_cast<size_t>(p) * n;
        const double* b = B + static_cast<size_t>(p) * m;
        for (int i = 0; i < n; ++i) {
            const double ai = a[i];
            double* c = C + static_cast<size_t>(i) * m;
            for (int j = 0; j < m; ++j) c[j] += ai * b[j];
        }
    }
}

}  // namespace

const KernelTable scalar_table = {gemm_nt_scalar, gemm_nn_scalar, gemm_tn_scalar, "scalar"};

}  // namespace stencilnet::kernels

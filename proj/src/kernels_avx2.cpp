#include "stencilnet/kernels.hpp"

#include <immintrin.h>

#include <cstddef>

namespace stencilnet::kernels {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

// FMA dot-product kernel, 4 W rows at a time. Lane partial sums reassociate
// the k loop, so results agree with the scalar kernel to rounding only.
void gemm_nt_avx2(int n, int m, int k, const double* X, const double* W, double* C, bool acc) {
    const int k4 = k & ~3;
    const int m4 = m & ~3;
    for (int i = 0; i < n; ++i) {
        const double* x = X + static_cast<size_t>(i) * k;
        double* c = C + static_cast<size_t>(i) * m;
        int j = 0;
        for (; j < m4; j += 4) {
            const double* w0 = W + static_cast<size_t>(j) * k;
            const double* w1 = w0 + k;
            const double* w2 = w1 + k;
            const double* w3 = w2 + k;
            __m256d a0 = _mm256_setzero_pd();
            __m256d a1 = _mm256_setzero_pd();
            __m256d a2 = _mm256_setzero_pd();
            __m256d a3 = _mm256_setzero_pd();
            for (int p = 0; p < k4; p += 4) {
                __m256d xv = _mm256_loadu_pd(x + p);
                a0 = _mm256_fmadd_pd(xv, _mm256_loadu_pd(w0 + p), a0);
                a1 = _mm256_fmadd_pd(xv, _mm256_loadu_pd(w1 + p), a1);
                a2 = _mm256_fmadd_pd(xv, _mm256_loadu_pd(w2 + p), a2);
                a3 = _mm256_fmadd_pd(xv, _mm256_loadu_pd(w3 + p), a3);
            }
            double s0 = hsum(a0), s1 = hsum(a1), s2 = hsum(a2), s3 = hsum(a3);
            for (int p = k4; p < k; ++p) {
                s0 += x[p] * w0[p];
                s1 += x[p] * w1[p];
                s2 += x[p] * w2[p];
                s3 += x[p] * w3[p];
            }
            if (acc) {
                c[j] += s0;
                c[j + 1] += s1;
                c[j + 2] += s2;
                c[j + 3] += s3;
            } else {
                c[j] = s0;
                c[j + 1] = s1;
                c[j + 2] = s2;
                c[j + 3] = s3;
            }
        }
        for (; j < m; ++j) {
            const double* w = W + static_cast<size_t>(j) * k;
            __m256d av = _mm256_setzero_pd();
            for (int p = 0; p < k4; p += 4)
                av = _mm256_fmadd_pd(_mm256_loadu_pd(x + p), _mm256_loadu_pd(w + p), av);
            double s = hsum(av);
            for (int p = k4; p < k; ++p) s += x[p] * w[p];
            c[j] = acc ? c[j] + s : s;
        }
    }
}

// axpy form over rows of B; separate mul/add (no FMA) keeps every element
// bit-identical to the scalar kernel.
void gemm_nn_avx2(int n, int k, int m, const double* A, const double* B, double* C, bool acc) {
    const int m4 = m & ~3;
    for (int i = 0; i < n; ++i) {
        double* c = C + static_cast<size_t>(i) * m;
        if (!acc)
            for (int j = 0; j < m; ++j) c[j] = 0.0;
        const double* a = A + static_cast<size_t>(i) * k;
        for (int p = 0; p < k; ++p) {
            const __m256d ap = _mm256_set1_pd(a[p]);
            const double* b = B + static_cast<size_t>(p) * m;
            int j = 0;
            for (; j < m4; j += 4) {
                __m256d cv = _mm256_loadu_pd(c + j);
                cv = _mm256_add_pd(cv, _mm256_mul_pd(ap, _mm256_loadu_pd(b + j)));
                _mm256_storeu_pd(c + j, cv);
            }
            for (; j < m; ++j) c[j] += a[p] * b[j];
        }
    }
}

void gemm_tn_avx2(int k, int n, int m, const double* A, const double* B, double* C, bool acc) {
    if (!acc) {
        for (size_t t = 0; t < static_cast<size_t>(n) * m; ++t) C[t] = 0.0;
    }
    const int m4 = m & ~3;
    for (int p = 0; p < k; ++p) {
        const double* a = A + static_cast<size_t>(p) * n;
        const double* b = B + static_cast<size_t>(p) * m;
        for (int i = 0; i < n; ++i) {
            const __m256d ai = _mm256_set1_pd(a[i]);
            double* c = C + static_cast<size_t>(i) * m;
            int j = 0;
            for (; j < m4; j += 4) {
                __m256d cv = _mm256_loadu_pd(c + j);
                cv = _mm256_add_pd(cv, _mm256_mul_pd(ai, _mm256_loadu_pd(b + j)));
                _mm256_storeu_pd(c + j, cv);
            }
            for (; j < m; ++j) c[j] += a[i] * b[j];
        }
    }
}

}  // namespace

const KernelTable avx2_table = {gemm_nt_avx2, gemm_nn_avx2, gemm_tn_avx2, "avx2"};

}  // namespace stencilnet::kernels

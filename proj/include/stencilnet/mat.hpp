#pragma once

#include <cassert>
#include <vector>

namespace stencilnet {

/// Dense row-major matrix. Fields are stored as n x 1 columns, stencil patch
/// batches as n x (2m+1).
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(int r, int c, double fill = 0.0) : rows(r), cols(c), a(static_cast<size_t>(r) * c, fill) {}

    double& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    double operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    double* data() { return a.data(); }
    const double* data() const { return a.data(); }
    size_t size() const { return a.size(); }

    /// Resize without preserving contents; keeps capacity when shrinking.
    void reshape(int r, int c) {
        rows = r;
        cols = c;
        a.resize(static_cast<size_t>(r) * c);
    }

    void fill(double v) { std::fill(a.begin(), a.end(), v); }
};

}  // namespace stencilnet

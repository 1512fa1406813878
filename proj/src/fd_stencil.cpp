#include "stencilnet/fd_stencil.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace stencilnet {

namespace {

// Exact fraction on __int128 with eager reduction. The moment systems here
// are tiny (<= ~8x8 with single-digit integer entries), so magnitudes stay
// far below overflow after reduction.
struct Frac {
    __int128 num = 0;
    __int128 den = 1;

    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    static Frac of(long long n, long long d = 1) {
        Frac f{n, d};
        f.reduce();
        return f;
    }

    bool zero() const { return num == 0; }

    Frac operator+(const Frac& o) const {
        Frac f{num * o.den + o.num * den, den * o.den};
        f.reduce();
        return f;
    }
    Frac operator-(const Frac& o) const {
        Frac f{num * o.den - o.num * den, den * o.den};
        f.reduce();
        return f;
    }
    Frac operator*(const Frac& o) const {
        Frac f{num * o.num, den * o.den};
        f.reduce();
        return f;
    }
    Frac operator/(const Frac& o) const {
        Frac f{num * o.den, den * o.num};
        f.reduce();
        return f;
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

long long ipow(long long base, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

long long factorial(int k) {
    long long r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

}  // namespace

double FdStencil::apply(std::span<const double> field, int i, double dx) const {
    const int n = static_cast<int>(field.size());
    double s = 0.0;
    for (size_t j = 0; j < offsets.size(); ++j) {
        int idx = i + offsets[j];
        idx %= n;
        if (idx < 0) idx += n;
        s += weights[j] * field[idx];
    }
    double scale = 1.0;
    for (int k = 0; k < derivative_order; ++k) scale *= dx;
    return s / scale;
}

FdStencil fd_weights(int derivative_order, int accuracy_order, std::span<const int> offsets) {
    const int l = derivative_order;
    const int r = accuracy_order;
    require(l >= 0, "derivative order must be non-negative");
    require(r >= 1, "accuracy order must be positive");
    const int n = static_cast<int>(offsets.size());
    require(n >= l + r - 1, "stencil too small for requested derivative/accuracy order");

    std::set<int> distinct(offsets.begin(), offsets.end());
    if (static_cast<int>(distinct.size()) != n)
        throw numerical_error("fd_weights: repeated offsets make the moment system singular");

    const int conds = l + r;  // k = 0 .. l+r-1

    // Augmented rational system A w = b, A[k][j] = o_j^k.
    std::vector<std::vector<Frac>> a(conds, std::vector<Frac>(n + 1));
    for (int k = 0; k < conds; ++k) {
        for (int j = 0; j < n; ++j) a[k][j] = Frac::of(ipow(offsets[j], k));
        a[k][n] = (k == l) ? Frac::of(factorial(k)) : Frac::of(0);
    }

    // Gauss-Jordan with exact pivots.
    std::vector<int> pivot_col(conds, -1);
    int row = 0;
    for (int col = 0; col < n && row < conds; ++col) {
        int pr = -1;
        for (int k = row; k < conds; ++k) {
            if (!a[k][col].zero()) {
                pr = k;
                break;
            }
        }
        if (pr < 0) continue;
        std::swap(a[row], a[pr]);
        const Frac p = a[row][col];
        for (int j = col; j <= n; ++j) a[row][j] = a[row][j] / p;
        for (int k = 0; k < conds; ++k) {
            if (k == row || a[k][col].zero()) continue;
            const Frac f = a[k][col];
            for (int j = col; j <= n; ++j) a[k][j] = a[k][j] - f * a[row][j];
        }
        pivot_col[row] = col;
        ++row;
    }
    for (int k = row; k < conds; ++k) {
        if (!a[k][n].zero())
            throw numerical_error(
                "fd_weights: moment conditions unsatisfiable on this stencil");
    }

    FdStencil s;
    s.offsets.assign(offsets.begin(), offsets.end());
    s.weights.assign(n, 0.0);  // free columns stay zero
    s.derivative_order = l;
    s.accuracy_order = r;
    for (int k = 0; k < row; ++k) s.weights[pivot_col[k]] = a[k][n].to_double();
    return s;
}

double moment_residual(const FdStencil& s, int k) {
    double lhs = 0.0;
    for (size_t j = 0; j < s.offsets.size(); ++j)
        lhs += s.weights[j] * std::pow(static_cast<double>(s.offsets[j]), k);
    const double rhs = (k == s.derivative_order) ? static_cast<double>(factorial(k)) : 0.0;
    return lhs - rhs;
}

}  // namespace stencilnet

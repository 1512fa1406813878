#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace stencilnet {

using Field = std::vector<double>;

/// Failure of a numerical procedure (blow-up, non-finite state, unsatisfiable
/// linear system). Distinct from std::invalid_argument, which flags misuse.
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File-level problems (missing file, bad magic, truncated payload).
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

inline bool all_finite(std::span<const double> v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

inline double max_abs(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

inline double l2_norm(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

/// Pairwise (tree) sum: deterministic and far more accurate than a running sum.
double pairwise_sum(std::span<const double> v);

/// Mean and population standard deviation over a flat array.
struct MeanStd {
    double mean;
    double std;
};
MeanStd mean_std(std::span<const double> v);

}  // namespace stencilnet

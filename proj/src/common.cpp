#include "stencilnet/common.hpp"

namespace stencilnet {

double pairwise_sum(std::span<const double> v) {
    const size_t n = v.size();
    if (n == 0) return 0.0;
    if (n <= 16) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const size_t half = n / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

MeanStd mean_std(std::span<const double> v) {
    require(!v.empty(), "mean_std of empty array");
    const double n = static_cast<double>(v.size());
    const double mean = pairwise_sum(v) / n;
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / n)};
}

}  // namespace stencilnet

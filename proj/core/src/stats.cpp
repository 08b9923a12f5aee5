#include "gls/stats.hpp"

#include <cmath>

#include "gls/errors.hpp"

namespace gls {

SummaryStat summarize(std::span<const double> values) {
    if (values.size() < 2) {
        throw too_few_values_error("summarize: need at least two values");
    }
    const double n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values) {
        mean += v;
    }
    mean /= n;
    double ss = 0.0;
    for (double v : values) {
        ss += (v - mean) * (v - mean);
    }
    const double sample_std = std::sqrt(ss / (n - 1.0));
    return {mean, sample_std / std::sqrt(n), values.size()};
}

double binomial_stderr(double p_hat, std::uint64_t n) {
    if (n == 0) {
        return 0.0;
    }
    return std::sqrt(std::max(p_hat * (1.0 - p_hat), 0.0) / static_cast<double>(n));
}

double RunningStat::stderr_mean() const {
    if (n_ < 2) {
        return 0.0;
    }
    const double n = static_cast<double>(n_);
    const double var = std::max(sum_sq_ / n - (sum_ / n) * (sum_ / n), 0.0) * n / (n - 1.0);
    return std::sqrt(var / n);
}

} // namespace gls

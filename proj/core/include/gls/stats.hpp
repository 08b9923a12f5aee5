#pragma once

#include <cstdint>
#include <span>

namespace gls {

struct SummaryStat {
    double mean = 0.0;
    double stderr_mean = 0.0;
    std::uint64_t count = 0;
};

// Mean and std/sqrt(n) with the (n-1)-denominator sample standard deviation.
// Throws too_few_values_error when fewer than two values are given.
SummaryStat summarize(std::span<const double> values);

// sqrt(p(1-p)/n) for an empirical proportion.
double binomial_stderr(double p_hat, std::uint64_t n);

// Streaming accumulator for mean/stderr; merges are associative in call
// order, so fixed-block reductions stay thread-count invariant.
class RunningStat {
  public:
    void add(double v) {
        ++n_;
        sum_ += v;
        sum_sq_ += v * v;
    }
    void merge(const RunningStat& o) {
        n_ += o.n_;
        sum_ += o.sum_;
        sum_sq_ += o.sum_sq_;
    }
    [[nodiscard]] std::uint64_t count() const { return n_; }
    [[nodiscard]] double mean() const { return n_ ? sum_ / static_cast<double>(n_) : 0.0; }
    [[nodiscard]] double stderr_mean() const;

  private:
    std::uint64_t n_ = 0;
    double sum_ = 0.0;
    double sum_sq_ = 0.0;
};

} // namespace gls

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gls/categorical.hpp"
#include "gls/rng.hpp"

namespace gls {

// K x N grid of shared Exp(1) variates; row k, column i holds the race entry
// consumed by proposal k for symbol i. All entries are finite and > 0.
class RaceMatrix {
  public:
    RaceMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), s_(rows * cols, 0.0) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] double operator()(std::size_t k, std::size_t i) const {
        return s_[k * cols_ + i];
    }
    double& operator()(std::size_t k, std::size_t i) { return s_[k * cols_ + i]; }
    [[nodiscard]] std::span<const double> row(std::size_t k) const {
        return {s_.data() + k * cols_, cols_};
    }

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> s_;
};

struct CoupleOutcome {
    int y = -1;
    std::vector<int> x;
    bool accepted = false;
};

// Fills a K x N race matrix with exp_variate(base tags + (row, symbol)).
// Deterministic in the seed context; the base's row/symbol slots are
// overwritten per entry.
RaceMatrix build_races(const SeedContext& base, std::size_t k, std::size_t n);

// argmin_i s[i]/w[i] with w[i] <= 0 scored as +infinity; ties go to the
// lowest index. Returns nullopt when every score is infinite.
std::optional<int> race_argmin(std::span<const double> s, std::span<const double> w);

// Gumbel-max draw from `dist` using one race row. Throws empty_support_error
// if the distribution has no positive mass (prevented by Categorical).
int gumbel_max_sample(std::span<const double> races, const Categorical& dist);

// Gumbel-max list sampling: y races against the column-wise minimum over all
// K rows with target q, proposal k races its own row against p.
CoupleOutcome gls_sample(const Categorical& p, const Categorical& q,
                         const RaceMatrix& races);

// Same selection rules with per-proposal distributions p_list[k].
CoupleOutcome gls_sample_heterogeneous(std::span<const Categorical> p_list,
                                       const Categorical& q,
                                       const RaceMatrix& races);

// Baseline without coupling: y and every x[k] race on mutually independent
// rows derived from the seed.
CoupleOutcome independent_sample(const Categorical& p, const Categorical& q,
                                 std::size_t k, const SeedContext& seed);

// Modified rejection baseline: proposals are tried in order against a
// residual of q, which shrinks to normalize(max(r - p_k, 0)) on each
// rejection; a final residual draw covers the all-reject case. The marginal
// of y is exactly q.
CoupleOutcome recursive_rejection_sample(std::span<const Categorical> p_list,
                                         const Categorical& q,
                                         const SeedContext& seed);

} // namespace gls

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gls/rng.hpp"

namespace gls {

// Finite probability vector on the alphabet {0, ..., N-1}. Construction
// normalizes, so sum(probs) == 1 up to rounding; all entries are >= 0 and at
// least one is > 0.
class Categorical {
  public:
    Categorical() = default;

    [[nodiscard]] std::size_t size() const { return probs_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return probs_[i]; }
    [[nodiscard]] std::span<const double> probs() const { return probs_; }

    friend Categorical make_categorical(std::span<const double> raw);

  private:
    explicit Categorical(std::vector<double> p) : probs_(std::move(p)) {}
    std::vector<double> probs_;
};

// Normalized copy of `raw`. Throws negative_mass_error on any entry < 0 and
// zero_total_mass_error when the sum is not positive.
Categorical make_categorical(std::span<const double> raw);
Categorical make_categorical(std::initializer_list<double> raw);

// 0.5 * sum_i |p_i - q_i|. Throws alphabet_mismatch_error on size mismatch.
double tv_distance(const Categorical& p, const Categorical& q);

// Keeps the m largest entries (ties resolved toward lower index), zeroes the
// rest and renormalizes. m >= size returns the input unchanged.
Categorical truncate_top_m(const Categorical& q, std::size_t m);

// Dirichlet(1)-distributed random categorical, derived from seed tags.
Categorical random_categorical(const SeedContext& ctx, std::size_t n);

} // namespace gls

#include "gls/categorical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gls/errors.hpp"

namespace gls {

Categorical make_categorical(std::span<const double> raw) {
    if (raw.empty()) {
        throw zero_total_mass_error("make_categorical: empty input");
    }
    double total = 0.0;
    for (double v : raw) {
        if (v < 0.0 || !std::isfinite(v)) {
            throw negative_mass_error("make_categorical: negative or non-finite entry");
        }
        total += v;
    }
    if (total <= 0.0) {
        throw zero_total_mass_error("make_categorical: total mass is zero");
    }
    std::vector<double> p(raw.begin(), raw.end());
    for (double& v : p) {
        v /= total;
    }
    return Categorical(std::move(p));
}

Categorical make_categorical(std::initializer_list<double> raw) {
    return make_categorical(std::span<const double>(raw.begin(), raw.size()));
}

double tv_distance(const Categorical& p, const Categorical& q) {
    if (p.size() != q.size()) {
        throw alphabet_mismatch_error("tv_distance: alphabet sizes differ");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += std::abs(p[i] - q[i]);
    }
    return 0.5 * acc;
}

Categorical truncate_top_m(const Categorical& q, std::size_t m) {
    if (m == 0) {
        throw zero_total_mass_error("truncate_top_m: m must be >= 1");
    }
    if (m >= q.size()) {
        return q;
    }
    std::vector<std::size_t> order(q.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return q[a] > q[b]; });
    std::vector<double> kept(q.size(), 0.0);
    for (std::size_t r = 0; r < m; ++r) {
        kept[order[r]] = q[order[r]];
    }
    return make_categorical(kept);
}

Categorical random_categorical(const SeedContext& ctx, std::size_t n) {
    std::vector<double> raw(n);
    for (std::size_t i = 0; i < n; ++i) {
        SeedContext c = ctx;
        c.symbol = static_cast<std::uint32_t>(i);
        raw[i] = exp_variate(c);
    }
    return make_categorical(raw);
}

} // namespace gls

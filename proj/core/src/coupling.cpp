#include "gls/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gls/errors.hpp"

namespace gls {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Step tags inside the recursive-rejection scheme.
constexpr std::uint32_t kRrsProposalStep = 0;
constexpr std::uint32_t kRrsAcceptStep = 1;
constexpr std::uint32_t kRrsResidualStep = 2;

void check_alphabets(std::size_t want, std::size_t got, const char* where) {
    if (want != got) {
        throw alphabet_mismatch_error(std::string(where) + ": alphabet sizes differ");
    }
}

} // namespace

RaceMatrix build_races(const SeedContext& base, std::size_t k, std::size_t n) {
    RaceMatrix races(k, n);
    SeedContext c = base;
    for (std::size_t row = 0; row < k; ++row) {
        c.row = static_cast<std::uint32_t>(row);
        for (std::size_t i = 0; i < n; ++i) {
            c.symbol = static_cast<std::uint32_t>(i);
            races(row, i) = exp_variate(c);
        }
    }
    return races;
}

std::optional<int> race_argmin(std::span<const double> s, std::span<const double> w) {
    double best = kInf;
    int arg = -1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (w[i] > 0.0) {
            const double score = s[i] / w[i];
            if (score < best) {
                best = score;
                arg = static_cast<int>(i);
            }
        }
    }
    if (arg < 0) {
        return std::nullopt;
    }
    return arg;
}

int gumbel_max_sample(std::span<const double> races, const Categorical& dist) {
    const auto arg = race_argmin(races, dist.probs());
    if (!arg) {
        throw empty_support_error("gumbel_max_sample: distribution has no support");
    }
    return *arg;
}

CoupleOutcome gls_sample(const Categorical& p, const Categorical& q,
                         const RaceMatrix& races) {
    check_alphabets(races.cols(), p.size(), "gls_sample");
    check_alphabets(races.cols(), q.size(), "gls_sample");

    const std::size_t n = races.cols();
    const std::size_t k = races.rows();

    std::vector<double> col_min(n, kInf);
    for (std::size_t row = 0; row < k; ++row) {
        for (std::size_t i = 0; i < n; ++i) {
            col_min[i] = std::min(col_min[i], races(row, i));
        }
    }

    CoupleOutcome out;
    out.y = gumbel_max_sample(col_min, q);
    out.x.resize(k);
    for (std::size_t row = 0; row < k; ++row) {
        out.x[row] = gumbel_max_sample(races.row(row), p);
    }
    out.accepted = std::find(out.x.begin(), out.x.end(), out.y) != out.x.end();
    return out;
}

CoupleOutcome gls_sample_heterogeneous(std::span<const Categorical> p_list,
                                       const Categorical& q,
                                       const RaceMatrix& races) {
    check_alphabets(races.rows(), p_list.size(), "gls_sample_heterogeneous");
    check_alphabets(races.cols(), q.size(), "gls_sample_heterogeneous");
    for (const Categorical& p : p_list) {
        check_alphabets(races.cols(), p.size(), "gls_sample_heterogeneous");
    }

    const std::size_t n = races.cols();
    const std::size_t k = races.rows();

    std::vector<double> col_min(n, kInf);
    for (std::size_t row = 0; row < k; ++row) {
        for (std::size_t i = 0; i < n; ++i) {
            col_min[i] = std::min(col_min[i], races(row, i));
        }
    }

    CoupleOutcome out;
    out.y = gumbel_max_sample(col_min, q);
    out.x.resize(k);
    for (std::size_t row = 0; row < k; ++row) {
        out.x[row] = gumbel_max_sample(races.row(row), p_list[row]);
    }
    out.accepted = std::find(out.x.begin(), out.x.end(), out.y) != out.x.end();
    return out;
}

CoupleOutcome independent_sample(const Categorical& p, const Categorical& q,
                                 std::size_t k, const SeedContext& seed) {
    check_alphabets(p.size(), q.size(), "independent_sample");
    // Row 0 feeds y, rows 1..K feed the proposals; rows are independent.
    const RaceMatrix races = build_races(seed, k + 1, p.size());

    CoupleOutcome out;
    out.y = gumbel_max_sample(races.row(0), q);
    out.x.resize(k);
    for (std::size_t row = 0; row < k; ++row) {
        out.x[row] = gumbel_max_sample(races.row(row + 1), p);
    }
    out.accepted = std::find(out.x.begin(), out.x.end(), out.y) != out.x.end();
    return out;
}

CoupleOutcome recursive_rejection_sample(std::span<const Categorical> p_list,
                                         const Categorical& q,
                                         const SeedContext& seed) {
    const std::size_t n = q.size();
    const std::size_t k = p_list.size();
    for (const Categorical& p : p_list) {
        check_alphabets(n, p.size(), "recursive_rejection_sample");
    }

    SeedContext c = seed;
    c.step = kRrsProposalStep;
    const RaceMatrix proposal_races = build_races(c, k, n);

    CoupleOutcome out;
    out.x.resize(k);
    for (std::size_t row = 0; row < k; ++row) {
        out.x[row] = gumbel_max_sample(proposal_races.row(row), p_list[row]);
    }

    std::vector<double> residual(q.probs().begin(), q.probs().end());
    int y = -1;
    for (std::size_t row = 0; row < k; ++row) {
        const int cand = out.x[row];
        const double pk = p_list[row][cand];
        const double ratio = pk > 0.0 ? std::min(1.0, residual[cand] / pk) : 0.0;
        SeedContext ac = seed;
        ac.step = kRrsAcceptStep;
        ac.row = static_cast<std::uint32_t>(row);
        if (derive_uniform(ac) < ratio) {
            y = cand;
            break;
        }
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            residual[i] = std::max(residual[i] - p_list[row][i], 0.0);
            total += residual[i];
        }
        if (total <= 0.0) {
            // Unreachable when rejection actually occurred; guard against
            // accumulated rounding by falling back to q.
            residual.assign(q.probs().begin(), q.probs().end());
            total = 1.0;
        }
        for (double& r : residual) {
            r /= total;
        }
    }
    if (y < 0) {
        SeedContext rc = seed;
        rc.step = kRrsResidualStep;
        std::vector<double> row(n);
        for (std::size_t i = 0; i < n; ++i) {
            rc.symbol = static_cast<std::uint32_t>(i);
            row[i] = exp_variate(rc);
        }
        const auto arg = race_argmin(row, residual);
        y = arg ? *arg : out.x.back();
    }
    out.y = y;
    out.accepted = std::find(out.x.begin(), out.x.end(), out.y) != out.x.end();
    return out;
}

} // namespace gls

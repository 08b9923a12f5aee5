#include "gls/bounds.hpp"

#include <algorithm>

#include "gls/errors.hpp"

namespace gls {

std::string_view to_string(BoundKind kind) {
    switch (kind) {
    case BoundKind::lml: return "lml";
    case BoundKind::lml_conditional: return "lml_conditional";
    case BoundKind::lml_relaxed: return "lml_relaxed";
    case BoundKind::maximal_coupling: return "maximal_coupling";
    case BoundKind::weak_coupling: return "weak_coupling";
    case BoundKind::conditional_lml: return "conditional_lml";
    case BoundKind::wz_error: return "wz_error";
    case BoundKind::strong_variant: return "strong_variant";
    }
    return "unknown";
}

namespace {

// Shared by lml_bound and its strong-invariance variant, which differ only in
// the numerator.
double lml_sum(const Categorical& p, const Categorical& q, std::size_t k,
               double numerator) {
    if (p.size() != q.size()) {
        throw alphabet_mismatch_error("lml_bound: alphabet sizes differ");
    }
    const double km1 = static_cast<double>(k) - 1.0;
    double total = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j) {
        if (q[j] <= 0.0 || p[j] <= 0.0) {
            continue; // denominator diverges; the limit term is 0
        }
        double denom = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            const double qr = q[i] / q[j];
            const double pr = p[i] / p[j];
            denom += std::max(qr, pr) + km1 * qr;
        }
        total += numerator / denom;
    }
    return total;
}

} // namespace

double lml_bound(const Categorical& p, const Categorical& q, std::size_t k) {
    return lml_sum(p, q, k, static_cast<double>(k));
}

double lml_conditional_bound(double p_j, double q_j, std::size_t k) {
    if (p_j <= 0.0) {
        throw degenerate_mass_error("lml_conditional_bound: p_j must be positive");
    }
    return 1.0 / (1.0 + q_j / (static_cast<double>(k) * p_j));
}

double lml_relaxed_bound(const Categorical& p, const Categorical& q, std::size_t k) {
    if (p.size() != q.size()) {
        throw alphabet_mismatch_error("lml_relaxed_bound: alphabet sizes differ");
    }
    double total = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j) {
        if (q[j] <= 0.0 || p[j] <= 0.0) {
            continue;
        }
        total += q[j] / (1.0 + q[j] / (static_cast<double>(k) * p[j]));
    }
    return total;
}

double maximal_coupling_prob(const Categorical& p, const Categorical& q) {
    return 1.0 - tv_distance(p, q);
}

double weak_coupling_bound(const Categorical& p, const Categorical& q) {
    const double tv = tv_distance(p, q);
    return (1.0 - tv) / (1.0 + tv);
}

double conditional_lml_bound(double q_j_a, std::span<const double> p_j_z) {
    if (q_j_a <= 0.0) {
        throw degenerate_mass_error("conditional_lml_bound: q_j(a) must be positive");
    }
    const double k = static_cast<double>(p_j_z.size());
    double total = 0.0;
    for (double pz : p_j_z) {
        if (pz <= 0.0) {
            throw degenerate_mass_error("conditional_lml_bound: p_j(z_k) must be positive");
        }
        total += 1.0 / (k + q_j_a / pz);
    }
    return total;
}

double wz_error_bound(const DiscreteWZModel& model, std::size_t k, std::size_t l_max) {
    const CondTable check = derive_p_w_given_t(model);
    const double kl = static_cast<double>(k) * static_cast<double>(l_max);
    double match = 0.0;
    for (std::size_t a = 0; a < model.source_size(); ++a) {
        if (model.p_a[a] <= 0.0) {
            continue;
        }
        for (std::size_t t = 0; t < model.side_size(); ++t) {
            const double pat = model.p_a[a] * model.p_t_given_a(a, t);
            if (pat <= 0.0) {
                continue;
            }
            for (std::size_t w = 0; w < model.rep_size(); ++w) {
                const double joint = pat * model.p_w_given_a(a, w);
                if (joint <= 0.0) {
                    continue;
                }
                // 2^{i(W;A|T)} is just the density ratio; joint > 0 implies
                // p_{W|T}(w|t) > 0.
                const double ratio = model.p_w_given_a(a, w) / check(t, w);
                match += joint / (1.0 + ratio / kl);
            }
        }
    }
    return 1.0 - match;
}

double strong_variant_accept_bound(const Categorical& p, const Categorical& q,
                                   std::size_t k, std::size_t j) {
    if (j < 1 || j > k) {
        throw invalid_active_count_error(
            "strong_variant_accept_bound: need 1 <= J <= K");
    }
    return lml_sum(p, q, k, static_cast<double>(j));
}

} // namespace gls

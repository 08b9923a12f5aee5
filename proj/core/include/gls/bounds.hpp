#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "gls/categorical.hpp"
#include "gls/wz_model.hpp"

namespace gls {

enum class BoundKind {
    lml,
    lml_conditional,
    lml_relaxed,
    maximal_coupling,
    weak_coupling,
    conditional_lml,
    wz_error,
    strong_variant,
};

std::string_view to_string(BoundKind kind);

struct BoundReport {
    double value = 0.0;
    BoundKind kind = BoundKind::lml;
};

// List matching lemma lower bound on Pr[y in {x_1..x_K}]:
//   sum_j K / sum_i [max(q_i/q_j, p_i/p_j) + (K-1) q_i/q_j],
// with terms where q_j = 0 or p_j = 0 contributing zero.
double lml_bound(const Categorical& p, const Categorical& q, std::size_t k);

// Conditional form: (1 + q_j / (K p_j))^-1. Throws degenerate_mass_error when
// p_j = 0.
double lml_conditional_bound(double p_j, double q_j, std::size_t k);

// Relaxed form: sum over j with q_j > 0, p_j > 0 of q_j (1 + q_j/(K p_j))^-1.
double lml_relaxed_bound(const Categorical& p, const Categorical& q, std::size_t k);

// 1 - d_TV and (1 - d_TV)/(1 + d_TV) respectively.
double maximal_coupling_prob(const Categorical& p, const Categorical& q);
double weak_coupling_bound(const Categorical& p, const Categorical& q);

// Conditional list matching bound for one-to-many coupling with side
// variables: sum_k (K + q_j(a)/p_j(z_k))^-1 with K = p_j_z.size().
double conditional_lml_bound(double q_j_a, std::span<const double> p_j_z);

// Coding error upper bound, evaluated by exact enumeration of the finite
// joint (A, W, T):
//   1 - E[(1 + r/(K L_max))^-1],  r = p_{W|A}(w|a) / p_{W|T}(w|t).
double wz_error_bound(const DiscreteWZModel& model, std::size_t k, std::size_t l_max);

// Acceptance bound for the strongly invariant decode variant with J of K
// drafts active; equals (J/K) * lml_bound. Throws invalid_active_count_error
// unless 1 <= J <= K.
double strong_variant_accept_bound(const Categorical& p, const Categorical& q,
                                   std::size_t k, std::size_t j);

} // namespace gls

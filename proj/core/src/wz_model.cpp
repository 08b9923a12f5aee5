#include "gls/wz_model.hpp"

#include <cmath>

#include "gls/errors.hpp"

namespace gls {

namespace {

constexpr double kRowTol = 1e-9;

void check_rows(const CondTable& t, const char* name) {
    for (std::size_t r = 0; r < t.rows(); ++r) {
        double sum = 0.0;
        for (std::size_t c = 0; c < t.cols(); ++c) {
            if (t(r, c) < 0.0) {
                throw inconsistent_model_error(std::string(name) +
                                               ": negative conditional probability");
            }
            sum += t(r, c);
        }
        if (std::abs(sum - 1.0) > kRowTol) {
            throw inconsistent_model_error(std::string(name) + ": row not normalized");
        }
    }
}

} // namespace

CondTable derive_p_w_given_t(const DiscreteWZModel& model) {
    const std::size_t na = model.source_size();
    const std::size_t nt = model.side_size();
    const std::size_t nw = model.rep_size();
    CondTable out(nt, nw);
    for (std::size_t t = 0; t < nt; ++t) {
        for (std::size_t w = 0; w < nw; ++w) {
            double acc = 0.0;
            for (std::size_t a = 0; a < na; ++a) {
                acc += model.p_w_given_a(a, w) * model.p_a_given_t(t, a);
            }
            out(t, w) = acc;
        }
    }
    for (std::size_t t = 0; t < nt; ++t) {
        if (model.p_t[t] <= 0.0) {
            continue;
        }
        double sum = 0.0;
        for (std::size_t w = 0; w < nw; ++w) {
            sum += out(t, w);
        }
        if (std::abs(sum - 1.0) > kRowTol) {
            throw inconsistent_model_error("derive_p_w_given_t: row not normalized");
        }
    }
    return out;
}

DiscreteWZModel make_wz_model(std::vector<double> p_a, CondTable p_t_given_a,
                              CondTable p_w_given_a) {
    if (p_a.size() != p_t_given_a.rows() || p_a.size() != p_w_given_a.rows()) {
        throw inconsistent_model_error("make_wz_model: table row counts disagree with |A|");
    }
    double total = 0.0;
    for (double v : p_a) {
        if (v < 0.0) {
            throw inconsistent_model_error("make_wz_model: negative source probability");
        }
        total += v;
    }
    if (std::abs(total - 1.0) > kRowTol) {
        throw inconsistent_model_error("make_wz_model: p_A not normalized");
    }
    check_rows(p_t_given_a, "p_{T|A}");
    check_rows(p_w_given_a, "p_{W|A}");

    DiscreteWZModel m;
    m.p_a = std::move(p_a);
    m.p_t_given_a = std::move(p_t_given_a);
    m.p_w_given_a = std::move(p_w_given_a);

    const std::size_t na = m.source_size();
    const std::size_t nt = m.side_size();

    m.p_t.assign(nt, 0.0);
    for (std::size_t t = 0; t < nt; ++t) {
        for (std::size_t a = 0; a < na; ++a) {
            m.p_t[t] += m.p_a[a] * m.p_t_given_a(a, t);
        }
    }

    m.p_a_given_t = CondTable(nt, na);
    for (std::size_t t = 0; t < nt; ++t) {
        for (std::size_t a = 0; a < na; ++a) {
            m.p_a_given_t(t, a) =
                m.p_t[t] > 0.0 ? m.p_a[a] * m.p_t_given_a(a, t) / m.p_t[t] : 0.0;
        }
    }

    m.p_w_given_t = derive_p_w_given_t(m);
    return m;
}

} // namespace gls

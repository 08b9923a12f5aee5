#pragma once

#include <cstddef>
#include <vector>

namespace gls {

// Row-stochastic matrix stored row-major: rows() x cols(), each row a
// conditional distribution.
class CondTable {
  public:
    CondTable() = default;
    CondTable(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), v_(rows * cols, 0.0) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] double operator()(std::size_t r, std::size_t c) const {
        return v_[r * cols_ + c];
    }
    double& operator()(std::size_t r, std::size_t c) { return v_[r * cols_ + c]; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> v_;
};

// Finite joint law of source A, side information T and representation W,
// specified by p_A, p_{T|A} and p_{W|A}. Construction derives p_T, p_{A|T}
// and p_{W|T}(w|t) = sum_a p_{W|A}(w|a) p_{A|T}(a|t), validating that every
// row is normalized to within 1e-9.
struct DiscreteWZModel {
    std::vector<double> p_a;
    CondTable p_t_given_a; // |A| x |T|
    CondTable p_w_given_a; // |A| x N
    // Derived.
    std::vector<double> p_t;
    CondTable p_a_given_t; // |T| x |A|
    CondTable p_w_given_t; // |T| x N

    [[nodiscard]] std::size_t source_size() const { return p_a.size(); }
    [[nodiscard]] std::size_t side_size() const { return p_t_given_a.cols(); }
    [[nodiscard]] std::size_t rep_size() const { return p_w_given_a.cols(); }
};

// Builds the derived tables. Throws inconsistent_model_error when an input
// row fails to normalize or the derived p_{W|T} does not marginalize back
// within 1e-9.
DiscreteWZModel make_wz_model(std::vector<double> p_a, CondTable p_t_given_a,
                              CondTable p_w_given_a);

// The p_{W|T} derivation alone, exposed for direct checks against hand
// tables.
CondTable derive_p_w_given_t(const DiscreteWZModel& model);

} // namespace gls

#pragma once

#include <stdexcept>
#include <string>

namespace gls {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct negative_mass_error : error {
    using error::error;
};
struct zero_total_mass_error : error {
    using error::error;
};
struct alphabet_mismatch_error : error {
    using error::error;
};
struct empty_support_error : error {
    using error::error;
};
struct degenerate_mass_error : error {
    using error::error;
};
struct invalid_active_count_error : error {
    using error::error;
};
struct inconsistent_model_error : error {
    using error::error;
};
struct missing_context_row_error : error {
    using error::error;
};
struct too_large_error : error {
    using error::error;
};
struct shape_mismatch_error : error {
    using error::error;
};
struct empty_input_error : error {
    using error::error;
};
struct too_few_values_error : error {
    using error::error;
};
struct invalid_config_error : error {
    using error::error;
};
struct io_failure_error : error {
    using error::error;
};

} // namespace gls

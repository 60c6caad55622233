#pragma once

#include <stdexcept>
#include <string>

namespace pmat {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

struct shape_error : error {
    using error::error;
};

struct domain_mismatch_error : error {
    using error::error;
};

struct invalid_base_error : error {
    using error::error;
};

struct invalid_modulus_error : error {
    using error::error;
};

struct singular_matrix_error : error {
    using error::error;
};

struct non_unimodular_error : error {
    using error::error;
};

struct unsupported_domain_error : error {
    using error::error;
};

struct unsupported_reduction_error : error {
    using error::error;
};

struct parameter_error : error {
    using error::error;
};

struct range_error : error {
    using error::error;
};

struct division_error : error {
    using error::error;
};

struct nonmonic_divisor_error : error {
    using error::error;
};

struct undefined_multiplicity_error : error {
    using error::error;
};

struct degree_mismatch_error : error {
    using error::error;
};

struct zero_root_error : error {
    using error::error;
};

struct degeneracy_error : error {
    using error::error;
};

struct singular_generator_error : error {
    using error::error;
};

struct conjecture_violation_error : error {
    using error::error;
};

struct zero_pivot_error : error {
    using error::error;
};

} // namespace pmat

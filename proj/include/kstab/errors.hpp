#ifndef KSTAB_ERRORS_HPP
#define KSTAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kstab {

// Base class for every contract violation raised by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
    explicit division_by_zero(const std::string& what) : error(what) {}
};

struct insufficient_samples : error {
    using error::error;
};

// An extra sample point does not lie on the fitted polynomial; usually
// means the sampling window starts before the sequence becomes polynomial.
struct inconsistent_samples : error {
    using error::error;
};

struct order_out_of_range : error {
    using error::error;
};

struct inadmissible_k : error {
    using error::error;
};

// The Gram matrix of the torus generators is not positive definite.
struct singular_gram : error {
    using error::error;
};

struct invalid_config : error {
    using error::error;
};

struct unsupported_parameters : error {
    using error::error;
};

} // namespace kstab

#endif

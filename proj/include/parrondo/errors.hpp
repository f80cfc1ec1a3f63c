#pragma once

#include <stdexcept>
#include <string>

namespace parrondo {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Zero states, all-zero weight vectors, reducible chains with no unique
/// stationary state.
struct degenerate_error : error {
    using error::error;
};

/// An operator failed a required unitarity check.
struct unitarity_error : error {
    using error::error;
};

/// Out-of-domain argument: probabilities outside [0,1], invalid eta,
/// non-finite entries, epsilon outside its legal interval.
struct parameter_error : error {
    using error::error;
};

}  // namespace parrondo

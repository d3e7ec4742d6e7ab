#ifndef RPPC_ERRORS_HPP
#define RPPC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rppc {

/* Input-validation failures (bad data handed to a constructor or parser).
 * The CLI maps these to exit code 2.
 */
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// parts[k] < parts[k+1] somewhere
struct NotWeaklyDecreasing : ValidationError {
    using ValidationError::ValidationError;
};

// inner partition sticks out of the outer one
struct NotContained : ValidationError {
    using ValidationError::ValidationError;
};

// a leading exponent of the polynomial is not a partition
struct NotSymmetric : ValidationError {
    using ValidationError::ValidationError;
};

/* A broken internal invariant: a state the algorithms are supposed to make
 * unreachable (mixed-mixed descent, border outside a column's support,
 * resolution step bound exceeded...). The CLI maps these to exit code 1.
 */
struct InternalInvariant : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace rppc

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace tomex {

// Base class for everything thrown by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Incompatible operands: dimensions, sequence lengths, Laurent windows.
struct mismatch_error : error {
    using error::error;
};

// A polynomial computation exceeded the configured degree cap.
struct degree_overflow_error : error {
    using error::error;
};

// A Laurent product produced a pole below the representable window.
struct pole_overflow_error : error {
    using error::error;
};

// A summation operator was applied to a sequence reaching its horizon.
struct truncation_error : error {
    using error::error;
};

// Two operators in a time-ordered product carry the same time label.
struct tie_error : error {
    using error::error;
};

// Gauss-Jordan hit a structurally singular matrix.
struct singular_error : error {
    using error::error;
};

// A stated precondition failed (center membership, leading coefficient, ...).
struct precondition_error : error {
    using error::error;
};

// Malformed configuration input.
struct config_error : error {
    using error::error;
};

} // namespace tomex

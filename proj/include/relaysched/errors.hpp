#pragma once

#include <stdexcept>
#include <string>

namespace relaysched {

/// Malformed or out-of-range user input (bad JSON, invalid capacities, ...).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation was invoked outside its precondition (e.g. singular matrix).
struct condition_not_met : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A guaranteed internal identity failed; indicates a bug, never user error.
struct internal_inconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Problem size exceeds a hard resource limit (e.g. LP with n > 10).
struct capacity_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace relaysched

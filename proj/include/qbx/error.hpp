#pragma once

#include <stdexcept>
#include <string>

namespace qbx {

// Malformed or semantically invalid input (bad JSON, zero coefficient,
// unknown generator, precondition violation on an operation).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured size cap was exceeded (degree, rank of the algebra, ...).
struct cap_error : std::runtime_error {
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

// Two routes that must agree produced different answers.  Reaching this
// means a bug, not a property of the input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace qbx

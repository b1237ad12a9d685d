#pragma once

#include <stdexcept>
#include <string>

namespace tw {

// Bad argument to a constructor or closed-form evaluator.
struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Request exceeds a hard size guard (graph order, enumeration order, ...).
struct CapacityExceeded : std::length_error {
    using std::length_error::length_error;
};

// Malformed graph6 input; `offset` is the byte position of the defect.
struct Graph6ParseError : std::runtime_error {
    std::size_t offset;
    Graph6ParseError(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

// A check was asked to scan an empty parameter range.
struct RangeEmpty : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace tw

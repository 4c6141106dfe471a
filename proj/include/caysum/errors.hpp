#pragma once

#include <stdexcept>
#include <string>

namespace caysum {

/// Base class for all errors raised by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input values (bad residues, square elements
/// in a connection set, trivial factors, ...).
struct validation_error : error {
    using error::error;
};

/// Two values belong to different groups, or a set is not actually a subgroup.
struct structural_error : error {
    using error::error;
};

/// A mathematical precondition of an operation does not hold
/// (e.g. the half-valency constructor on a set of the wrong size).
struct precondition_error : error {
    using error::error;
};

/// The requested computation exceeds a configured enumeration bound.
struct resource_error : error {
    using error::error;
};

/// Text input could not be parsed; `position` is a byte offset into the input.
struct parse_error : error {
    std::size_t position;
    parse_error(const std::string& what, std::size_t pos)
        : error(what), position(pos) {}
};

}  // namespace caysum

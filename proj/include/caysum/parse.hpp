#pragma once

#include <string>

#include "caysum/group.hpp"

namespace caysum {

/// "Z4xZ2xZ3" (case-insensitive) or "[4,2,3]".  Throws parse_error with a
/// byte position, or validation_error for factors < 2.
GroupSpec parse_group_spec(const std::string& text);

/// "(1,0,2)" for multi-factor groups; bare integers for single-factor ones.
Element parse_element(const GroupSpec& g, const std::string& text);

/// Comma-separated elements: "1,11" or "(1,0,0),(0,1,0)".  Empty string is
/// the empty set.
ElementSet parse_element_set(const GroupSpec& g, const std::string& text);

}  // namespace caysum

#pragma once

#include "massbind/tree.hpp"

#include <string_view>

namespace massbind::detail {

// Parses YAML text into the generic tree, mapping plain scalars to JSON
// types per the YAML core schema (null/bool/int/float, otherwise string).
// Quoted scalars always stay strings. Throws Error{SyntaxError}.
Tree yaml_to_tree(std::string_view text);

} // namespace massbind::detail

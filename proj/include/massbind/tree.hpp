#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace massbind {

// Generic document tree. Ordered so that everything downstream (attribute
// sets, candidate pairs, reports) follows document order instead of
// alphabetical or hash order.
using Tree = nlohmann::ordered_json;

// RFC 6901 token escaping: `~` -> `~0`, `/` -> `~1`.
std::string escape_pointer_token(std::string_view token);

} // namespace massbind

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace massbind {

// One dotted-path segment of an attribute name, e.g. "accountId" out of
// "user.accountId", split into lowercase word tokens. array_rank counts
// trailing "[]" markers ("tags[]" has rank 1, core tokens {"tags"}).
struct PathSegment {
  std::vector<std::string> tokens;
  int array_rank = 0;

  friend bool operator==(const PathSegment&, const PathSegment&) = default;
};

/// Splits a raw attribute name into path segments and each segment into
/// lowercase tokens. Boundaries are `_`, `-`, whitespace, any other
/// non-alphanumeric byte, and lowercase-to-uppercase camelCase transitions.
/// Digits stay attached to their token.
std::vector<PathSegment> tokenize(std::string_view raw);

/// The classic five-step Porter stemmer over a lowercase ASCII token.
/// Tokens of length <= 2 and tokens containing anything outside [a-z0-9]
/// are returned unchanged.
std::string porter_stem(std::string_view token);

/// Canonical form of a raw attribute name: tokens stemmed and joined with
/// `_`, segments rejoined with `.` and `[]` preserved. Idempotent; the
/// result contains only lowercase letters, digits, `_`, `.`, `[`, `]`.
std::string canonical_key(std::string_view raw);

} // namespace massbind

#pragma once

#include "massbind/tree.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace massbind {

enum class Syntax { Json, Yaml };

enum class WarningKind {
  CycleTruncated,        // a $ref chain re-entered itself; empty map substituted
  SiblingKeysDiscarded,  // keys next to $ref dropped per the OpenAPI 3.0 rule
  DepthLimitReached,     // schema flattening stopped at max_depth
  MalformedSchema,       // a schema node that cannot be walked; yields no records
};

const char* to_string(WarningKind kind) noexcept;

struct Warning {
  WarningKind kind;
  std::string json_pointer; // where in the document the condition was found
  std::string message;

  friend bool operator==(const Warning&, const Warning&) = default;
};

// A parsed OpenAPI 3.x document, before reference resolution.
struct RawDocument {
  Tree root;
  std::string source_name;
  Syntax syntax = Syntax::Json;
};

// A document with every internal `$ref` inlined. The only remnants of
// reference cycles are empty maps, one warning each.
struct ResolvedDocument {
  Tree root;
  std::string source_name;
  std::vector<Warning> warnings;
};

/// Parses `text` as JSON, falling back to YAML, and validates the minimal
/// OpenAPI 3.x structure (an `openapi` version starting with "3" and a
/// `paths` map). Throws Error with kind SyntaxError, UnsupportedVersion or
/// StructureError.
RawDocument load_document(std::string_view text, std::string_view source_name);

/// Replaces every `{"$ref": "#/..."}` map with a deep copy of its target,
/// recursively. Sibling keys next to `$ref` are discarded with a warning;
/// cycles are cut with an empty map and a warning. Throws Error with kind
/// DanglingRef or ExternalRefUnsupported.
ResolvedDocument resolve_refs(const RawDocument& doc);

} // namespace massbind

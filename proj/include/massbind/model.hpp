#pragma once

#include "massbind/document.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace massbind {

enum class AttrLocation { Body, Path, Query, Header };
enum class HttpMethod { Get, Post, Put, Patch, Delete, Other };

const char* to_string(AttrLocation location) noexcept;

// One extracted attribute: the flattened dotted path, its canonical key,
// where it lives, and a JSON-pointer back into the resolved document.
struct AttributeRecord {
  std::string raw_name;
  std::string canonical_key;
  AttrLocation location = AttrLocation::Body;
  std::string pointer;
  bool declared_readonly = false;

  friend bool operator==(const AttributeRecord&, const AttributeRecord&) = default;
};

struct OperationModel {
  HttpMethod method = HttpMethod::Other;
  std::string method_name; // uppercase, e.g. "POST"
  std::string path;
  std::string operation_id;
  std::vector<AttributeRecord> request_attrs;  // deduplicated by canonical key
  std::vector<AttributeRecord> response_attrs; // deduplicated by canonical key

  bool is_read() const noexcept { return method == HttpMethod::Get; }
  bool is_write() const noexcept {
    return method == HttpMethod::Post || method == HttpMethod::Put ||
           method == HttpMethod::Patch;
  }

  friend bool operator==(const OperationModel&, const OperationModel&) = default;
};

struct EndpointModel {
  std::string path;
  std::vector<OperationModel> operations;

  friend bool operator==(const EndpointModel&, const EndpointModel&) = default;
};

struct ModelTotals {
  std::size_t endpoint_count = 0;
  std::size_t operation_count = 0;

  friend bool operator==(const ModelTotals&, const ModelTotals&) = default;
};

struct ApiModel {
  std::string source_name;
  std::vector<EndpointModel> endpoints; // document order
  ModelTotals totals;
  std::vector<Warning> warnings; // loader warnings plus extraction warnings

  friend bool operator==(const ApiModel&, const ApiModel&) = default;
};

// Selects which response status codes feed the response attribute set.
// Accepts a class ("2xx".."5xx"), an exact code ("201"), or "all".
class ResponseCodeFilter {
public:
  ResponseCodeFilter() = default;

  static ResponseCodeFilter parse(std::string_view text); // throws InvalidConfig
  bool matches(std::string_view status_key) const noexcept;
  const std::string& text() const noexcept { return text_; }

  friend bool operator==(const ResponseCodeFilter&, const ResponseCodeFilter&) = default;

private:
  std::string text_ = "2xx";
  int klass_ = 2;    // leading digit of the class, when klass mode
  int exact_ = -1;   // exact status code, when >= 0
  bool all_ = false;
};

struct ExtractionConfig {
  bool include_parameters = true;
  ResponseCodeFilter response_codes;
  int max_depth = 16;

  friend bool operator==(const ExtractionConfig&, const ExtractionConfig&) = default;
};

/// Flattens a resolved, ref-free schema node into attribute records.
/// Object properties become dotted paths (`a.b.c`), arrays descend into
/// `items` with a `[]` marker (`tags[].name`), and allOf/oneOf/anyOf
/// branches are unioned. Recursion stops at max_depth with a warning;
/// malformed sub-schemas yield zero records plus a warning.
std::vector<AttributeRecord> flatten_schema(const Tree& schema,
                                            AttrLocation location,
                                            int max_depth,
                                            std::string_view pointer_base = "",
                                            std::vector<Warning>* warnings = nullptr);

/// Walks the resolved document and produces the endpoint/operation model
/// with per-operation request and response attribute sets.
ApiModel extract_model(const ResolvedDocument& doc, const ExtractionConfig& config = {});

} // namespace massbind

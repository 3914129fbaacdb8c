#include "massbind/model.hpp"

#include "massbind/canonical.hpp"
#include "massbind/error.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <unordered_set>
#include <utility>

namespace massbind {

namespace {

// Recognised path-item keys that denote HTTP operations, in OpenAPI's own
// spelling. Anything else under a path item (parameters, summary, x-...)
// is not an operation.
constexpr std::array<std::string_view, 8> kMethodKeys = {
    "get", "put", "post", "delete", "options", "head", "patch", "trace"};

HttpMethod method_from_key(std::string_view key) {
  if (key == "get") return HttpMethod::Get;
  if (key == "post") return HttpMethod::Post;
  if (key == "put") return HttpMethod::Put;
  if (key == "patch") return HttpMethod::Patch;
  if (key == "delete") return HttpMethod::Delete;
  return HttpMethod::Other;
}

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

void warn(std::vector<Warning>* warnings, WarningKind kind, std::string pointer,
          std::string message) {
  if (warnings) warnings->push_back({kind, std::move(pointer), std::move(message)});
}

// Insertion-ordered attribute set, deduplicated by canonical key; on a tie
// the first pointer in document order wins.
class AttrSetBuilder {
public:
  explicit AttrSetBuilder(std::vector<Warning>* warnings) : warnings_(warnings) {}

  void add(AttributeRecord record) {
    if (record.raw_name.empty() || record.canonical_key.empty()) {
      warn(warnings_, WarningKind::MalformedSchema, record.pointer,
           "attribute name \"" + record.raw_name + "\" has no canonical form; skipped");
      return;
    }
    if (seen_.insert(record.canonical_key).second) out_.push_back(std::move(record));
  }

  std::vector<AttributeRecord> take() { return std::move(out_); }

private:
  std::vector<AttributeRecord> out_;
  std::unordered_set<std::string> seen_;
  std::vector<Warning>* warnings_;
};

bool node_readonly(const Tree& node) {
  auto it = node.find("readOnly");
  return it != node.end() && it->is_boolean() && it->get<bool>();
}

class SchemaWalker {
public:
  SchemaWalker(AttrSetBuilder& builder, AttrLocation location, int max_depth,
               std::vector<Warning>* warnings)
      : builder_(builder), location_(location), max_depth_(max_depth), warnings_(warnings) {}

  void walk(const Tree& node, const std::string& name_path, const std::string& pointer,
            int depth, bool readonly_inherited) {
    if (!node.is_object()) {
      warn(warnings_, WarningKind::MalformedSchema, pointer, "schema node is not a map");
      return;
    }
    bool readonly = readonly_inherited || node_readonly(node);
    bool structured = false;

    if (auto props = node.find("properties"); props != node.end()) {
      structured = true;
      if (!props->is_object()) {
        warn(warnings_, WarningKind::MalformedSchema, pointer + "/properties",
             "`properties` is not a map");
      } else {
        for (const auto& item : props->items()) {
          if (item.key().empty()) {
            warn(warnings_, WarningKind::MalformedSchema, pointer + "/properties",
                 "empty property name; skipped");
            continue;
          }
          std::string child_path =
              name_path.empty() ? item.key() : name_path + "." + item.key();
          std::string child_pointer =
              pointer + "/properties/" + escape_pointer_token(item.key());
          descend(item.value(), child_path, child_pointer, depth, readonly);
        }
      }
    }

    if (auto items = node.find("items"); items != node.end()) {
      structured = true;
      if (!items->is_object()) {
        warn(warnings_, WarningKind::MalformedSchema, pointer + "/items",
             "`items` is not a map");
      } else {
        descend(*items, name_path + "[]", pointer + "/items", depth, readonly);
      }
    }

    for (std::string_view comb : {"allOf", "oneOf", "anyOf"}) {
      auto branches = node.find(comb);
      if (branches == node.end()) continue;
      structured = true;
      std::string comb_pointer = pointer + "/" + std::string(comb);
      if (!branches->is_array()) {
        warn(warnings_, WarningKind::MalformedSchema, comb_pointer,
             "`" + std::string(comb) + "` is not a sequence");
        continue;
      }
      // Branches are unioned under the same name path, oneOf/anyOf alike.
      for (std::size_t i = 0; i < branches->size(); ++i)
        descend((*branches)[i], name_path, comb_pointer + "/" + std::to_string(i), depth,
                readonly);
    }

    if (!structured && !name_path.empty())
      builder_.add({name_path, canonical_key(name_path), location_, pointer, readonly});
  }

private:
  void descend(const Tree& child, const std::string& child_path,
               const std::string& child_pointer, int depth, bool readonly) {
    if (depth + 1 > max_depth_) {
      warn(warnings_, WarningKind::DepthLimitReached, child_pointer,
           "schema nesting exceeds max_depth " + std::to_string(max_depth_) +
               "; substructure cut");
      // The truncated node itself still counts as an attribute.
      if (!child_path.empty()) {
        bool ro = readonly || (child.is_object() && node_readonly(child));
        builder_.add({child_path, canonical_key(child_path), location_, child_pointer, ro});
      }
      return;
    }
    walk(child, child_path, child_pointer, depth + 1, readonly);
  }

  AttrSetBuilder& builder_;
  AttrLocation location_;
  int max_depth_;
  std::vector<Warning>* warnings_;
};

AttrLocation location_from_in(std::string_view in, bool& known) {
  known = true;
  if (in == "path") return AttrLocation::Path;
  if (in == "query") return AttrLocation::Query;
  if (in == "header") return AttrLocation::Header;
  known = false;
  return AttrLocation::Body;
}

const Tree* object_field(const Tree& node, std::string_view key) {
  auto it = node.find(key);
  if (it == node.end() || !it->is_object()) return nullptr;
  return &*it;
}

void flatten_media_schemas(const Tree& content, const std::string& content_pointer,
                           AttrSetBuilder& builder, int max_depth,
                           std::vector<Warning>* warnings) {
  for (const auto& media : content.items()) {
    if (!media.value().is_object()) continue;
    auto schema = media.value().find("schema");
    if (schema == media.value().end()) continue;
    std::string schema_pointer =
        content_pointer + "/" + escape_pointer_token(media.key()) + "/schema";
    SchemaWalker(builder, AttrLocation::Body, max_depth, warnings)
        .walk(*schema, "", schema_pointer, 0, false);
  }
}

void collect_parameters(const Tree* params, const std::string& params_pointer,
                        AttrSetBuilder& builder, std::vector<Warning>* warnings) {
  if (!params || !params->is_array()) return;
  for (std::size_t i = 0; i < params->size(); ++i) {
    const Tree& p = (*params)[i];
    std::string pointer = params_pointer + "/" + std::to_string(i);
    if (!p.is_object()) {
      warn(warnings, WarningKind::MalformedSchema, pointer, "parameter is not a map");
      continue;
    }
    auto name = p.find("name");
    auto in = p.find("in");
    if (name == p.end() || !name->is_string() || in == p.end() || !in->is_string())
      continue;
    bool known = false;
    AttrLocation location = location_from_in(in->get<std::string>(), known);
    if (!known) continue; // cookie and unknown locations are out of scope
    bool readonly = false;
    if (const Tree* schema = object_field(p, "schema")) readonly = node_readonly(*schema);
    std::string raw = name->get<std::string>();
    builder.add({raw, canonical_key(raw), location, pointer, readonly});
  }
}

OperationModel build_operation(std::string_view method_key, const Tree& op_node,
                               const std::string& path, const std::string& op_pointer,
                               const Tree* shared_params, const std::string& shared_pointer,
                               const ExtractionConfig& config,
                               std::vector<Warning>* warnings) {
  OperationModel op;
  op.method = method_from_key(method_key);
  op.method_name = upper(method_key);
  op.path = path;
  if (auto id = op_node.find("operationId"); id != op_node.end() && id->is_string())
    op.operation_id = id->get<std::string>();

  AttrSetBuilder request(warnings);
  if (const Tree* body = object_field(op_node, "requestBody")) {
    if (const Tree* content = object_field(*body, "content"))
      flatten_media_schemas(*content, op_pointer + "/requestBody/content", request,
                            config.max_depth, warnings);
  }
  if (config.include_parameters) {
    collect_parameters(shared_params, shared_pointer, request, warnings);
    auto own = op_node.find("parameters");
    if (own != op_node.end())
      collect_parameters(&*own, op_pointer + "/parameters", request, warnings);
  }
  op.request_attrs = request.take();

  AttrSetBuilder response(warnings);
  if (const Tree* responses = object_field(op_node, "responses")) {
    for (const auto& item : responses->items()) {
      if (!config.response_codes.matches(item.key())) continue;
      if (!item.value().is_object()) continue;
      if (const Tree* content = object_field(item.value(), "content"))
        flatten_media_schemas(*content,
                              op_pointer + "/responses/" + escape_pointer_token(item.key()) +
                                  "/content",
                              response, config.max_depth, warnings);
    }
  }
  op.response_attrs = response.take();
  return op;
}

} // namespace

const char* to_string(AttrLocation location) noexcept {
  switch (location) {
    case AttrLocation::Body: return "body";
    case AttrLocation::Path: return "path";
    case AttrLocation::Query: return "query";
    case AttrLocation::Header: return "header";
  }
  return "body";
}

ResponseCodeFilter ResponseCodeFilter::parse(std::string_view text) {
  ResponseCodeFilter out;
  out.text_ = std::string(text);
  if (text == "all") {
    out.all_ = true;
    return out;
  }
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (text.size() == 3 && digit(text[0]) && (text[1] == 'x' || text[1] == 'X') &&
      (text[2] == 'x' || text[2] == 'X')) {
    out.klass_ = text[0] - '0';
    if (out.klass_ >= 1 && out.klass_ <= 5) return out;
  }
  if (text.size() == 3 && digit(text[0]) && digit(text[1]) && digit(text[2])) {
    out.exact_ = (text[0] - '0') * 100 + (text[1] - '0') * 10 + (text[2] - '0');
    return out;
  }
  throw Error(ErrorKind::InvalidConfig,
              "invalid response code filter \"" + std::string(text) +
                  "\"; expected a class like 2xx, an exact code like 201, or all");
}

bool ResponseCodeFilter::matches(std::string_view status_key) const noexcept {
  if (all_) return true;
  if (status_key.size() != 3) return false;
  char first = status_key[0];
  if (first < '0' || first > '9') return false;
  auto wildcard = [](char c) { return c == 'x' || c == 'X'; };
  bool is_class_key = wildcard(status_key[1]) && wildcard(status_key[2]);
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  bool is_code_key = digit(status_key[1]) && digit(status_key[2]);
  if (!is_class_key && !is_code_key) return false;
  if (exact_ >= 0)
    return is_code_key &&
           (first - '0') * 100 + (status_key[1] - '0') * 10 + (status_key[2] - '0') == exact_;
  return first - '0' == klass_;
}

std::vector<AttributeRecord> flatten_schema(const Tree& schema, AttrLocation location,
                                            int max_depth, std::string_view pointer_base,
                                            std::vector<Warning>* warnings) {
  AttrSetBuilder builder(warnings);
  SchemaWalker(builder, location, max_depth, warnings)
      .walk(schema, "", std::string(pointer_base), 0, false);
  return builder.take();
}

ApiModel extract_model(const ResolvedDocument& doc, const ExtractionConfig& config) {
  ApiModel model;
  model.source_name = doc.source_name;
  model.warnings = doc.warnings;

  const Tree* paths = doc.root.is_object() ? object_field(doc.root, "paths") : nullptr;
  if (!paths) return model;

  for (const auto& entry : paths->items()) {
    const std::string& path = entry.key();
    if (path.empty() || path[0] != '/') continue; // specification extensions
    EndpointModel endpoint;
    endpoint.path = path;
    std::string path_pointer = "/paths/" + escape_pointer_token(path);

    if (!entry.value().is_object()) {
      warn(&model.warnings, WarningKind::MalformedSchema, path_pointer,
           "path item is not a map");
      model.endpoints.push_back(std::move(endpoint));
      continue;
    }

    const Tree* shared_params = nullptr;
    if (auto sp = entry.value().find("parameters"); sp != entry.value().end())
      shared_params = &*sp;

    for (const auto& member : entry.value().items()) {
      if (std::find(kMethodKeys.begin(), kMethodKeys.end(), member.key()) ==
          kMethodKeys.end())
        continue;
      if (!member.value().is_object()) {
        warn(&model.warnings, WarningKind::MalformedSchema,
             path_pointer + "/" + member.key(), "operation is not a map");
        continue;
      }
      endpoint.operations.push_back(build_operation(
          member.key(), member.value(), path, path_pointer + "/" + member.key(),
          shared_params, path_pointer + "/parameters", config, &model.warnings));
    }
    model.endpoints.push_back(std::move(endpoint));
  }

  model.totals.endpoint_count = model.endpoints.size();
  for (const EndpointModel& endpoint : model.endpoints)
    model.totals.operation_count += endpoint.operations.size();
  return model;
}

} // namespace massbind

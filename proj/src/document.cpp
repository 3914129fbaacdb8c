#include "massbind/document.hpp"

#include "massbind/error.hpp"
#include "yaml_tree.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace massbind {

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

bool looks_like_json(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    return c == '{' || c == '[';
  }
  return false;
}

std::string version_text(const Tree& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump(); // numbers like 3.0 keep a useful prefix
}

void validate_raw(const Tree& root, std::string_view source_name) {
  std::string prefix = std::string(source_name) + ": ";
  if (!root.is_object())
    throw Error(ErrorKind::StructureError, prefix + "document root is not a map");
  auto openapi = root.find("openapi");
  if (openapi == root.end()) {
    if (root.contains("swagger"))
      throw Error(ErrorKind::UnsupportedVersion,
                  prefix + "swagger 2.0 documents are not supported; only OpenAPI 3.x");
    throw Error(ErrorKind::UnsupportedVersion, prefix + "missing `openapi` version field");
  }
  std::string version = version_text(*openapi);
  if (!version.starts_with('3'))
    throw Error(ErrorKind::UnsupportedVersion,
                prefix + "unsupported OpenAPI version \"" + version + "\"; only 3.x");
  auto paths = root.find("paths");
  if (paths == root.end())
    throw Error(ErrorKind::StructureError, prefix + "missing `paths` map");
  if (!paths->is_object())
    throw Error(ErrorKind::StructureError, prefix + "`paths` is not a map");
}

std::string percent_decode(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '%' && i + 2 < s.size()) {
      auto hex = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
      };
      int hi = hex(s[i + 1]);
      int lo = hex(s[i + 2]);
      if (hi >= 0 && lo >= 0) {
        out += static_cast<char>(hi * 16 + lo);
        i += 2;
        continue;
      }
    }
    out += s[i];
  }
  return out;
}

class RefResolver {
public:
  explicit RefResolver(const Tree& root) : root_(root) {}

  Tree resolve(const Tree& node, const std::string& path) {
    if (node.is_object()) {
      auto ref = node.find("$ref");
      if (ref != node.end() && ref->is_string()) return expand_ref(node, *ref, path);
      Tree out = Tree::object();
      for (const auto& item : node.items())
        out[item.key()] = resolve(item.value(), path + "/" + escape_pointer_token(item.key()));
      return out;
    }
    if (node.is_array()) {
      Tree out = Tree::array();
      for (std::size_t i = 0; i < node.size(); ++i)
        out.push_back(resolve(node[i], path + "/" + std::to_string(i)));
      return out;
    }
    return node;
  }

  std::vector<Warning> take_warnings() { return std::move(warnings_); }

private:
  Tree expand_ref(const Tree& holder, const Tree& ref, const std::string& path) {
    std::string target = ref.get<std::string>();
    if (!target.starts_with('#'))
      throw Error(ErrorKind::ExternalRefUnsupported,
                  "external $ref \"" + target + "\" at " + pretty(path) +
                      "; only document-internal #/ references are supported");
    std::string pointer = percent_decode(std::string_view(target).substr(1));

    if (holder.size() > 1) {
      std::string keys;
      for (const auto& item : holder.items()) {
        if (item.key() == "$ref") continue;
        if (!keys.empty()) keys += ", ";
        keys += item.key();
      }
      warnings_.push_back({WarningKind::SiblingKeysDiscarded, path,
                           "keys beside $ref discarded: " + keys});
    }

    if (std::find(active_.begin(), active_.end(), pointer) != active_.end()) {
      warnings_.push_back({WarningKind::CycleTruncated, path,
                           "reference cycle re-enters \"" + target +
                               "\"; substituted an empty map"});
      return Tree::object();
    }

    const Tree* resolved = lookup(pointer, path, target);
    active_.push_back(pointer);
    Tree out = resolve(*resolved, pointer);
    active_.pop_back();
    return out;
  }

  const Tree* lookup(const std::string& pointer, const std::string& path,
                     const std::string& original) {
    try {
      return &root_.at(Tree::json_pointer(pointer));
    } catch (const nlohmann::json::exception&) {
      throw Error(ErrorKind::DanglingRef,
                  "$ref \"" + original + "\" at " + pretty(path) + " targets nothing");
    }
  }

  static std::string pretty(const std::string& path) { return path.empty() ? "/" : path; }

  const Tree& root_;
  std::vector<std::string> active_; // pointers currently being expanded
  std::vector<Warning> warnings_;
};

} // namespace

std::string escape_pointer_token(std::string_view token) {
  std::string out;
  out.reserve(token.size());
  for (char c : token) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SyntaxError: return "syntax error";
    case ErrorKind::UnsupportedVersion: return "unsupported version";
    case ErrorKind::StructureError: return "structure error";
    case ErrorKind::DanglingRef: return "dangling ref";
    case ErrorKind::ExternalRefUnsupported: return "external ref unsupported";
    case ErrorKind::UnknownFormat: return "unknown format";
    case ErrorKind::InvalidConfig: return "invalid config";
    case ErrorKind::IoError: return "io error";
  }
  return "error";
}

const char* to_string(WarningKind kind) noexcept {
  switch (kind) {
    case WarningKind::CycleTruncated: return "cycle_truncated";
    case WarningKind::SiblingKeysDiscarded: return "sibling_keys_discarded";
    case WarningKind::DepthLimitReached: return "depth_limit_reached";
    case WarningKind::MalformedSchema: return "malformed_schema";
  }
  return "warning";
}

RawDocument load_document(std::string_view text, std::string_view source_name) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos)
    throw Error(ErrorKind::SyntaxError, std::string(source_name) + ": empty input");

  Tree root;
  Syntax syntax = Syntax::Json;
  try {
    root = Tree::parse(text);
  } catch (const nlohmann::json::parse_error& json_error) {
    try {
      root = detail::yaml_to_tree(text);
      syntax = Syntax::Yaml;
    } catch (const Error& yaml_error) {
      if (looks_like_json(text)) {
        auto [line, column] = line_column(text, json_error.byte);
        throw Error(ErrorKind::SyntaxError,
                    std::string(source_name) + ":" + std::to_string(line) + ":" +
                        std::to_string(column) + ": json parse error");
      }
      throw Error(ErrorKind::SyntaxError,
                  std::string(source_name) + ": " + yaml_error.what());
    }
  }

  validate_raw(root, source_name);
  return {std::move(root), std::string(source_name), syntax};
}

ResolvedDocument resolve_refs(const RawDocument& doc) {
  RefResolver resolver(doc.root);
  Tree resolved = resolver.resolve(doc.root, "");
  return {std::move(resolved), doc.source_name, resolver.take_warnings()};
}

} // namespace massbind

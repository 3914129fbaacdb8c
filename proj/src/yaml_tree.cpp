#include "yaml_tree.hpp"

#include "massbind/error.hpp"

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <cstdlib>
#include <string>

namespace massbind::detail {

namespace {

constexpr int kMaxYamlDepth = 512;

Tree scalar_to_tree(const YAML::Node& node) {
  const std::string& s = node.Scalar();
  if (node.Tag() == "!") return Tree(s); // quoted scalar
  if (s.empty() || s == "~" || s == "null" || s == "Null" || s == "NULL")
    return Tree(nullptr);
  if (s == "true" || s == "True" || s == "TRUE") return Tree(true);
  if (s == "false" || s == "False" || s == "FALSE") return Tree(false);

  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (*begin == '+') ++begin; // from_chars rejects an explicit plus
  long long integer = 0;
  auto [iptr, iec] = std::from_chars(begin, end, integer);
  if (iec == std::errc() && iptr == end) return Tree(integer);

  char* dend = nullptr;
  double real = std::strtod(s.c_str(), &dend);
  if (dend == s.c_str() + s.size() && dend != s.c_str()) return Tree(real);

  return Tree(s);
}

Tree convert(const YAML::Node& node, int depth) {
  if (depth > kMaxYamlDepth)
    throw Error(ErrorKind::SyntaxError, "yaml nesting exceeds depth limit");
  switch (node.Type()) {
    case YAML::NodeType::Null:
    case YAML::NodeType::Undefined:
      return Tree(nullptr);
    case YAML::NodeType::Scalar:
      return scalar_to_tree(node);
    case YAML::NodeType::Sequence: {
      Tree out = Tree::array();
      for (const auto& item : node) out.push_back(convert(item, depth + 1));
      return out;
    }
    case YAML::NodeType::Map: {
      Tree out = Tree::object();
      for (const auto& kv : node) {
        if (!kv.first.IsScalar())
          throw Error(ErrorKind::SyntaxError, "non-scalar mapping key");
        out[kv.first.Scalar()] = convert(kv.second, depth + 1);
      }
      return out;
    }
  }
  return Tree(nullptr);
}

} // namespace

Tree yaml_to_tree(std::string_view text) {
  try {
    YAML::Node root = YAML::Load(std::string(text));
    return convert(root, 0);
  } catch (const YAML::Exception& e) {
    throw Error(ErrorKind::SyntaxError,
                "yaml parse error at line " + std::to_string(e.mark.line + 1) +
                    ", column " + std::to_string(e.mark.column + 1) + ": " + e.msg);
  }
}

} // namespace massbind::detail

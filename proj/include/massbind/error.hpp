#pragma once

#include <stdexcept>
#include <string>

namespace massbind {

enum class ErrorKind {
  SyntaxError,            // input is neither parseable JSON nor YAML
  UnsupportedVersion,     // `openapi` missing or not 3.x (covers swagger 2.0)
  StructureError,         // required structure missing (root map, `paths` map)
  DanglingRef,            // $ref pointer targets nothing in the document
  ExternalRefUnsupported, // $ref to another file or URL
  UnknownFormat,          // unrecognised output format name
  InvalidConfig,          // bad configuration value (threshold, code filter, ...)
  IoError,                // file could not be read or written
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace massbind

#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace testsupport {

inline std::filesystem::path testdata_dir() {
  return std::filesystem::path(MASSBIND_TESTDATA_DIR);
}

inline std::string read_fixture(const std::string& relative) {
  std::filesystem::path path = testdata_dir() / relative;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

} // namespace testsupport

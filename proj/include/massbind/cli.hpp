#pragma once

#include "massbind/report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace massbind {

struct CliConfig {
  std::vector<std::string> inputs;
  double threshold = 0.5;
  PairScope scope = PairScope::Global;
  ReportFormat format = ReportFormat::Text;
  std::string export_path; // empty: no downstream export
  bool corpus_mode = false;
  bool fail_on_findings = false;
  bool include_parameters = true;
  std::string response_codes = "2xx";
  int max_depth = 16;
};

// Exit codes: 0 ran clean with no findings (or fail_on_findings off),
// 1 findings present and fail_on_findings on, 2 usage error or any input
// that failed to parse or resolve.
inline constexpr int kExitClean = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitError = 2;

/// Runs the analysis described by `config`. Reports go to `out`, every
/// diagnostic goes to `err`.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Full command line entry point (argument parsing plus run()).
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace massbind

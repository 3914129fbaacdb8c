#include "massbind/cli.hpp"

#include "massbind/canonical.hpp"
#include "massbind/error.hpp"
#include "massbind/version.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace massbind {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool spec_extension(const fs::path& path) {
  std::string ext = path.extension().string();
  return ext == ".json" || ext == ".yaml" || ext == ".yml";
}

SpecReport analyze_file(const fs::path& path, const std::string& display_name,
                        const DetectorConfig& detector, const ExtractionConfig& extraction) {
  RawDocument raw = load_document(read_file(path), display_name);
  ResolvedDocument resolved = resolve_refs(raw);
  ApiModel model = extract_model(resolved, extraction);
  std::vector<CandidatePair> candidates = find_candidates(model, detector);
  return summarize(candidates, model, detector, extraction);
}

struct CorpusEntry {
  fs::path path;
  std::string name;
};

// Directories are scanned recursively for .json/.yaml/.yml files; names are
// relative to the scanned directory and the list is sorted so output order
// does not depend on filesystem iteration order.
std::vector<CorpusEntry> discover(const std::vector<std::string>& inputs, std::ostream& err,
                                  bool& any_error) {
  std::vector<CorpusEntry> entries;
  for (const std::string& input : inputs) {
    fs::path base(input);
    std::error_code ec;
    if (fs::is_directory(base, ec)) {
      std::vector<CorpusEntry> found;
      for (const auto& item : fs::recursive_directory_iterator(base, ec)) {
        if (!item.is_regular_file() || !spec_extension(item.path())) continue;
        found.push_back({item.path(), item.path().lexically_relative(base).generic_string()});
      }
      std::sort(found.begin(), found.end(),
                [](const CorpusEntry& a, const CorpusEntry& b) { return a.name < b.name; });
      entries.insert(entries.end(), found.begin(), found.end());
    } else if (fs::exists(base, ec)) {
      entries.push_back({base, base.generic_string()});
    } else {
      err << "error: " << input << ": no such file or directory\n";
      any_error = true;
    }
  }
  return entries;
}

std::string merged_export(const std::vector<SpecReport>& reports) {
  // Concatenation of the per-report arrays, kept as one array.
  Tree merged = Tree::array();
  for (const SpecReport& report : reports) {
    Tree part = Tree::parse(export_downstream(report));
    for (Tree& record : part) merged.push_back(std::move(record));
  }
  return merged.dump(2) + "\n";
}

void write_export(const std::string& path, const std::string& payload) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  out << payload;
}

} // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (config.inputs.empty()) {
    err << "error: at least one input path is required\n";
    return kExitError;
  }
  if (config.threshold < 0.0 || config.threshold > 1.0) {
    err << "error: threshold must be within [0, 1]\n";
    return kExitError;
  }
  if (config.max_depth < 1) {
    err << "error: max-depth must be at least 1\n";
    return kExitError;
  }

  DetectorConfig detector{config.threshold, config.scope, true};
  ExtractionConfig extraction;
  extraction.include_parameters = config.include_parameters;
  extraction.max_depth = config.max_depth;
  try {
    extraction.response_codes = ResponseCodeFilter::parse(config.response_codes);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  bool any_error = false;
  std::size_t findings = 0;
  std::vector<SpecReport> reports;

  if (config.corpus_mode) {
    for (const CorpusEntry& entry : discover(config.inputs, err, any_error)) {
      try {
        reports.push_back(analyze_file(entry.path, entry.name, detector, extraction));
        findings += reports.back().pairs.size();
      } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        any_error = true;
      }
    }
    out << render_corpus(aggregate(reports), config.format);
  } else {
    for (const std::string& input : config.inputs) {
      std::error_code ec;
      if (fs::is_directory(fs::path(input), ec)) {
        err << "error: " << input << " is a directory; use --corpus\n";
        any_error = true;
        continue;
      }
      try {
        SpecReport report = analyze_file(fs::path(input), input, detector, extraction);
        out << render_report(report, config.format);
        findings += report.pairs.size();
        reports.push_back(std::move(report));
      } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        any_error = true;
      }
    }
  }

  if (!config.export_path.empty()) {
    try {
      write_export(config.export_path, merged_export(reports));
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      any_error = true;
    }
  }

  if (any_error) return kExitError;
  if (findings > 0 && config.fail_on_findings) return kExitFindings;
  return kExitClean;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{std::string(kToolName) +
               " - mine OpenAPI 3.x specifications for mass-assignment candidates"};
  app.require_subcommand(1);

  CliConfig config;
  std::string scope = "global";
  std::string format = "text";

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Analyze one or more specifications, or a corpus directory");
  analyze->add_option("inputs", config.inputs, "Specification files (or directories with --corpus)")
      ->required();
  analyze->add_option("--threshold", config.threshold,
                      "Similarity threshold in [0, 1] (default 0.5)")
      ->check(CLI::Range(0.0, 1.0));
  analyze->add_option("--scope", scope, "Pairing scope: global or same_path")
      ->check(CLI::IsMember({"global", "same_path", "same-path"}));
  analyze->add_option("--format", format, "Output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  analyze->add_option("--export", config.export_path,
                      "Write a downstream-tester worklist (json) to this path");
  analyze->add_flag("--corpus", config.corpus_mode,
                    "Treat inputs as directories; analyze every .json/.yaml/.yml below them");
  analyze->add_flag("--fail-on-findings", config.fail_on_findings,
                    "Exit with code 1 when candidates are found");
  analyze->add_flag("--include-parameters,!--no-parameters", config.include_parameters,
                    "Count path/query/header parameters as request attributes (default on)");
  analyze->add_option("--response-codes", config.response_codes,
                      "Response classes feeding the read set: 2xx (default), an exact code, or all");
  analyze->add_option("--max-depth", config.max_depth, "Schema flattening depth limit (default 16)")
      ->check(CLI::Range(1, 1000));

  std::vector<std::string> words;
  CLI::App* stem = app.add_subcommand("stem", "Print the canonical key of each word");
  stem->add_option("words", words, "Words or attribute names")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitClean;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitClean;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitError;
  }

  if (stem->parsed()) {
    for (const std::string& word : words) out << canonical_key(word) << "\n";
    return kExitClean;
  }

  config.scope = (scope == "global") ? PairScope::Global : PairScope::SamePath;
  config.format = parse_format(format);
  return run(config, out, err);
}

} // namespace massbind

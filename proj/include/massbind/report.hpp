#pragma once

#include "massbind/detector.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace massbind {

enum class ReportFormat { Json, Text, Csv };

ReportFormat parse_format(std::string_view name); // throws UnknownFormat

struct FlaggedCounts {
  std::size_t endpoints = 0;
  std::size_t operations = 0;
  std::size_t attributes = 0;

  friend bool operator==(const FlaggedCounts&, const FlaggedCounts&) = default;
};

struct ReportConfig {
  DetectorConfig detector;
  ExtractionConfig extraction;

  friend bool operator==(const ReportConfig&, const ReportConfig&) = default;
};

struct SpecReport {
  std::string source_name;
  std::string tool_version;
  ReportConfig config;
  ModelTotals totals;
  FlaggedCounts flagged;
  std::vector<CandidatePair> pairs;
  std::vector<Warning> warnings;

  friend bool operator==(const SpecReport&, const SpecReport&) = default;
};

// One row of the corpus table: totals and flagged counts for one spec.
struct CorpusRow {
  std::string name;
  std::size_t endpoints = 0;
  std::size_t operations = 0;
  std::size_t flagged_endpoints = 0;
  std::size_t flagged_operations = 0;
  std::size_t flagged_attributes = 0;

  friend bool operator==(const CorpusRow&, const CorpusRow&) = default;
};

struct CorpusSummary {
  std::vector<CorpusRow> rows;
  CorpusRow total_row; // element-wise column sums, name "Total"

  friend bool operator==(const CorpusSummary&, const CorpusSummary&) = default;
};

/// Counts flagged endpoints (distinct write paths), operations (distinct
/// write ops) and attributes (distinct write-op/canonical-key pairs) and
/// assembles the per-spec report.
SpecReport summarize(const std::vector<CandidatePair>& candidates,
                     const ApiModel& model,
                     const DetectorConfig& detector = {},
                     const ExtractionConfig& extraction = {});

/// Renders a report as json (stable key order, exact ratio plus 2-decimal
/// display), text (one block per pair) or csv (one row per pair attribute).
/// Byte-identical across runs for identical inputs.
std::string render_report(const SpecReport& report, ReportFormat format);

/// JSON array of suspected findings, one record per (pair, attribute),
/// usable as a worklist for a downstream dynamic tester.
std::string export_downstream(const SpecReport& report);

/// Parses the json rendering back into a structurally equal SpecReport.
SpecReport parse_report_json(std::string_view text);

CorpusSummary aggregate(const std::vector<SpecReport>& reports);

std::string render_corpus(const CorpusSummary& summary, ReportFormat format);

} // namespace massbind

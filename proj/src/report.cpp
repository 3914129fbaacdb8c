#include "massbind/report.hpp"

#include "massbind/error.hpp"
#include "massbind/version.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <string>
#include <utility>

namespace massbind {

namespace {

AttrLocation location_from_string(std::string_view s) {
  if (s == "path") return AttrLocation::Path;
  if (s == "query") return AttrLocation::Query;
  if (s == "header") return AttrLocation::Header;
  return AttrLocation::Body;
}

Tree warnings_to_tree(const std::vector<Warning>& warnings) {
  Tree out = Tree::array();
  for (const Warning& w : warnings) {
    Tree node = Tree::object();
    node["kind"] = to_string(w.kind);
    node["pointer"] = w.json_pointer;
    node["message"] = w.message;
    out.push_back(std::move(node));
  }
  return out;
}

WarningKind warning_kind_from_string(std::string_view s) {
  if (s == "cycle_truncated") return WarningKind::CycleTruncated;
  if (s == "sibling_keys_discarded") return WarningKind::SiblingKeysDiscarded;
  if (s == "depth_limit_reached") return WarningKind::DepthLimitReached;
  return WarningKind::MalformedSchema;
}

Tree report_to_tree(const SpecReport& report) {
  Tree root = Tree::object();
  root["tool"] = std::string(kToolName);
  root["tool_version"] = report.tool_version;
  root["source"] = report.source_name;

  Tree config = Tree::object();
  config["threshold"] = report.config.detector.threshold;
  config["scope"] = to_string(report.config.detector.scope);
  config["require_strict_count"] = report.config.detector.require_strict_count;
  config["include_parameters"] = report.config.extraction.include_parameters;
  config["response_codes"] = report.config.extraction.response_codes.text();
  config["max_depth"] = report.config.extraction.max_depth;
  root["config"] = std::move(config);

  root["totals"] = {{"endpoints", report.totals.endpoint_count},
                    {"operations", report.totals.operation_count}};
  root["flagged"] = {{"endpoints", report.flagged.endpoints},
                     {"operations", report.flagged.operations},
                     {"attributes", report.flagged.attributes}};

  Tree pairs = Tree::array();
  for (const CandidatePair& pair : report.pairs) {
    Tree node = Tree::object();
    node["write"] = {{"method", pair.write_op.method}, {"path", pair.write_op.path}};
    node["read"] = {{"method", pair.read_op.method}, {"path", pair.read_op.path}};
    node["similarity"] = {{"shared", pair.similarity.shared},
                          {"total", pair.similarity.total},
                          {"display", pair.similarity.display()}};
    node["sizes"] = {{"res_count", pair.res_count}, {"req_count", pair.req_count}};
    Tree attrs = Tree::array();
    for (const AttributeRecord& attr : pair.candidate_attrs) {
      Tree a = Tree::object();
      a["name"] = attr.raw_name;
      a["canonical"] = attr.canonical_key;
      a["location"] = to_string(attr.location);
      a["pointer"] = attr.pointer;
      a["readonly_declared"] = attr.declared_readonly;
      attrs.push_back(std::move(a));
    }
    node["candidates"] = std::move(attrs);
    pairs.push_back(std::move(node));
  }
  root["pairs"] = std::move(pairs);
  root["warnings"] = warnings_to_tree(report.warnings);
  return root;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string render_text(const SpecReport& report) {
  std::ostringstream out;
  out << kToolName << " report for " << report.source_name << "\n";
  out << "totals: " << report.totals.endpoint_count << " endpoint(s), "
      << report.totals.operation_count << " operation(s)\n";
  out << "flagged: " << report.flagged.endpoints << " endpoint(s), "
      << report.flagged.operations << " operation(s), " << report.flagged.attributes
      << " attribute(s)\n";
  for (const CandidatePair& pair : report.pairs) {
    out << "\nwrite " << pair.write_op.method << " " << pair.write_op.path << "  <=  read "
        << pair.read_op.method << " " << pair.read_op.path << "  [similarity "
        << pair.similarity.display() << " = " << pair.similarity.shared << "/"
        << pair.similarity.total << "; response " << pair.res_count
        << " attrs vs request " << pair.req_count << "]\n";
    out << "  candidate attributes:\n";
    for (const AttributeRecord& attr : pair.candidate_attrs) {
      out << "    " << attr.raw_name << "  (" << to_string(attr.location) << ")";
      if (attr.declared_readonly) out << "  [declared readOnly]";
      out << "  " << attr.pointer << "\n";
    }
  }
  if (!report.warnings.empty()) {
    out << "\nwarnings:\n";
    for (const Warning& w : report.warnings)
      out << "  " << to_string(w.kind) << " at " << (w.json_pointer.empty() ? "/" : w.json_pointer)
          << ": " << w.message << "\n";
  }
  return out.str();
}

std::string render_csv(const SpecReport& report) {
  std::ostringstream out;
  out << "write_method,write_path,attribute,read_method,read_path,similarity\n";
  for (const CandidatePair& pair : report.pairs)
    for (const AttributeRecord& attr : pair.candidate_attrs)
      out << csv_field(pair.write_op.method) << "," << csv_field(pair.write_op.path) << ","
          << csv_field(attr.raw_name) << "," << csv_field(pair.read_op.method) << ","
          << csv_field(pair.read_op.path) << "," << pair.similarity.display() << "\n";
  return out.str();
}

} // namespace

ReportFormat parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "text") return ReportFormat::Text;
  if (name == "csv") return ReportFormat::Csv;
  throw Error(ErrorKind::UnknownFormat,
              "unknown format \"" + std::string(name) + "\"; expected json, text or csv");
}

SpecReport summarize(const std::vector<CandidatePair>& candidates, const ApiModel& model,
                     const DetectorConfig& detector, const ExtractionConfig& extraction) {
  SpecReport report;
  report.source_name = model.source_name;
  report.tool_version = std::string(kToolVersion);
  report.config = {detector, extraction};
  report.totals = model.totals;
  report.pairs = candidates;
  report.warnings = model.warnings;

  std::set<std::string> endpoints;
  std::set<std::pair<std::string, std::string>> operations;
  std::set<std::pair<std::pair<std::string, std::string>, std::string>> attributes;
  for (const CandidatePair& pair : candidates) {
    std::pair<std::string, std::string> op{pair.write_op.method, pair.write_op.path};
    endpoints.insert(pair.write_op.path);
    operations.insert(op);
    for (const AttributeRecord& attr : pair.candidate_attrs)
      attributes.insert({op, attr.canonical_key});
  }
  report.flagged = {endpoints.size(), operations.size(), attributes.size()};
  return report;
}

std::string render_report(const SpecReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return report_to_tree(report).dump(2) + "\n";
    case ReportFormat::Text: return render_text(report);
    case ReportFormat::Csv: return render_csv(report);
  }
  throw Error(ErrorKind::UnknownFormat, "unknown report format");
}

std::string export_downstream(const SpecReport& report) {
  Tree out = Tree::array();
  for (const CandidatePair& pair : report.pairs) {
    for (const AttributeRecord& attr : pair.candidate_attrs) {
      Tree record = Tree::object();
      record["method"] = pair.write_op.method;
      record["path"] = pair.write_op.path;
      record["attribute_raw_name"] = attr.raw_name;
      record["attribute_location"] = to_string(attr.location);
      record["evidence"] = {{"read_method", pair.read_op.method},
                            {"read_path", pair.read_op.path},
                            {"similarity", pair.similarity.value()}};
      out.push_back(std::move(record));
    }
  }
  return out.dump(2) + "\n";
}

SpecReport parse_report_json(std::string_view text) {
  Tree root;
  try {
    root = Tree::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw Error(ErrorKind::SyntaxError, "report is not valid json");
  }
  SpecReport report;
  report.source_name = root.value("source", "");
  report.tool_version = root.value("tool_version", "");
  const Tree& config = root.at("config");
  report.config.detector.threshold = config.value("threshold", 0.5);
  report.config.detector.scope =
      config.value("scope", "global") == std::string("same_path") ? PairScope::SamePath
                                                                  : PairScope::Global;
  report.config.detector.require_strict_count = config.value("require_strict_count", true);
  report.config.extraction.include_parameters = config.value("include_parameters", true);
  report.config.extraction.response_codes =
      ResponseCodeFilter::parse(config.value("response_codes", "2xx"));
  report.config.extraction.max_depth = config.value("max_depth", 16);
  report.totals.endpoint_count = root.at("totals").value("endpoints", 0u);
  report.totals.operation_count = root.at("totals").value("operations", 0u);
  report.flagged.endpoints = root.at("flagged").value("endpoints", 0u);
  report.flagged.operations = root.at("flagged").value("operations", 0u);
  report.flagged.attributes = root.at("flagged").value("attributes", 0u);
  for (const Tree& node : root.at("pairs")) {
    CandidatePair pair;
    pair.write_op = {node.at("write").value("method", ""), node.at("write").value("path", "")};
    pair.read_op = {node.at("read").value("method", ""), node.at("read").value("path", "")};
    pair.similarity = {node.at("similarity").value("shared", 0u),
                       node.at("similarity").value("total", 0u)};
    pair.res_count = node.at("sizes").value("res_count", 0u);
    pair.req_count = node.at("sizes").value("req_count", 0u);
    for (const Tree& a : node.at("candidates")) {
      AttributeRecord attr;
      attr.raw_name = a.value("name", "");
      attr.canonical_key = a.value("canonical", "");
      attr.location = location_from_string(a.value("location", "body"));
      attr.pointer = a.value("pointer", "");
      attr.declared_readonly = a.value("readonly_declared", false);
      pair.candidate_attrs.push_back(std::move(attr));
    }
    report.pairs.push_back(std::move(pair));
  }
  for (const Tree& w : root.at("warnings"))
    report.warnings.push_back({warning_kind_from_string(w.value("kind", "")),
                               w.value("pointer", ""), w.value("message", "")});
  return report;
}

CorpusSummary aggregate(const std::vector<SpecReport>& reports) {
  CorpusSummary summary;
  summary.total_row.name = "Total";
  for (const SpecReport& report : reports) {
    CorpusRow row{report.source_name,         report.totals.endpoint_count,
                  report.totals.operation_count, report.flagged.endpoints,
                  report.flagged.operations,  report.flagged.attributes};
    summary.total_row.endpoints += row.endpoints;
    summary.total_row.operations += row.operations;
    summary.total_row.flagged_endpoints += row.flagged_endpoints;
    summary.total_row.flagged_operations += row.flagged_operations;
    summary.total_row.flagged_attributes += row.flagged_attributes;
    summary.rows.push_back(std::move(row));
  }
  return summary;
}

std::string render_corpus(const CorpusSummary& summary, ReportFormat format) {
  if (format == ReportFormat::Json) {
    Tree root = Tree::object();
    auto row_to_tree = [](const CorpusRow& row) {
      Tree node = Tree::object();
      node["name"] = row.name;
      node["endpoints"] = row.endpoints;
      node["operations"] = row.operations;
      node["flagged_endpoints"] = row.flagged_endpoints;
      node["flagged_operations"] = row.flagged_operations;
      node["flagged_attributes"] = row.flagged_attributes;
      return node;
    };
    Tree rows = Tree::array();
    for (const CorpusRow& row : summary.rows) rows.push_back(row_to_tree(row));
    root["rows"] = std::move(rows);
    root["total"] = row_to_tree(summary.total_row);
    return root.dump(2) + "\n";
  }

  if (format == ReportFormat::Csv) {
    std::ostringstream out;
    out << "name,endpoints,operations,flagged_endpoints,flagged_operations,"
           "flagged_attributes\n";
    auto emit = [&](const CorpusRow& row) {
      out << csv_field(row.name) << "," << row.endpoints << "," << row.operations << ","
          << row.flagged_endpoints << "," << row.flagged_operations << ","
          << row.flagged_attributes << "\n";
    };
    for (const CorpusRow& row : summary.rows) emit(row);
    emit(summary.total_row);
    return out.str();
  }

  std::size_t name_width = 4; // "name"
  for (const CorpusRow& row : summary.rows) name_width = std::max(name_width, row.name.size());
  name_width = std::max(name_width, summary.total_row.name.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(name_width) + 2) << "name" << std::right
      << std::setw(10) << "endpoints" << std::setw(12) << "operations" << std::setw(10)
      << "flag_ep" << std::setw(10) << "flag_op" << std::setw(10) << "flag_attr" << "\n";
  auto emit = [&](const CorpusRow& row) {
    out << std::left << std::setw(static_cast<int>(name_width) + 2) << row.name << std::right
        << std::setw(10) << row.endpoints << std::setw(12) << row.operations << std::setw(10)
        << row.flagged_endpoints << std::setw(10) << row.flagged_operations << std::setw(10)
        << row.flagged_attributes << "\n";
  };
  for (const CorpusRow& row : summary.rows) emit(row);
  emit(summary.total_row);
  return out.str();
}

} // namespace massbind

#include "massbind/detector.hpp"

#include <algorithm>
#include <cstdio>
#include <iterator>

namespace massbind {

namespace {

std::set<std::string> canonical_keys(const std::vector<AttributeRecord>& attrs) {
  std::set<std::string> keys;
  for (const AttributeRecord& attr : attrs) keys.insert(attr.canonical_key);
  return keys;
}

} // namespace

const char* to_string(PairScope scope) noexcept {
  return scope == PairScope::SamePath ? "same_path" : "global";
}

std::string Ratio::display() const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", value());
  return buf;
}

Ratio jaccard_similarity(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::size_t shared = 0;
  for (const std::string& key : a) shared += b.count(key);
  std::size_t total = a.size() + b.size() - shared;
  return {shared, total};
}

std::vector<CandidatePair> find_candidates(const ApiModel& model,
                                           const DetectorConfig& config) {
  std::vector<const OperationModel*> writes;
  std::vector<const OperationModel*> reads;
  for (const EndpointModel& endpoint : model.endpoints) {
    for (const OperationModel& op : endpoint.operations) {
      if (op.is_write()) writes.push_back(&op);
      if (op.is_read()) reads.push_back(&op);
    }
  }

  std::vector<CandidatePair> pairs;
  for (const OperationModel* write : writes) {
    const std::set<std::string> req = canonical_keys(write->request_attrs);
    for (const OperationModel* read : reads) {
      if (config.scope == PairScope::SamePath && read->path != write->path) continue;
      const std::set<std::string> res = canonical_keys(read->response_attrs);
      if (config.require_strict_count && res.size() <= req.size()) continue;
      Ratio similarity = jaccard_similarity(req, res);
      if (similarity.value() < config.threshold) continue;

      std::set<std::string> extra;
      std::set_difference(res.begin(), res.end(), req.begin(), req.end(),
                          std::inserter(extra, extra.end()));
      if (extra.empty()) continue;

      CandidatePair pair;
      pair.write_op = {write->method_name, write->path};
      pair.read_op = {read->method_name, read->path};
      pair.similarity = similarity;
      pair.res_count = res.size();
      pair.req_count = req.size();
      for (const AttributeRecord& attr : read->response_attrs)
        if (extra.count(attr.canonical_key)) pair.candidate_attrs.push_back(attr);
      pairs.push_back(std::move(pair));
    }
  }
  return pairs;
}

} // namespace massbind

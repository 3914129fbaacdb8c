#pragma once

// Independent brute-force oracle for the pairing step, plus a generator of
// small random API models. The oracle applies the three pairing conditions
// literally over every (read, write) combination and never calls into the
// library's detector; tests compare the two outputs structurally.

#include "massbind/canonical.hpp"
#include "massbind/detector.hpp"
#include "massbind/model.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace testsupport {

struct OraclePair {
  std::string write_method, write_path;
  std::string read_method, read_path;
  std::size_t shared = 0, total = 0;
  std::set<std::string> candidate_keys;

  friend bool operator==(const OraclePair&, const OraclePair&) = default;
  friend auto operator<=>(const OraclePair&, const OraclePair&) = default;
};

inline std::set<std::string> oracle_keys(const std::vector<massbind::AttributeRecord>& attrs) {
  std::set<std::string> keys;
  for (const auto& a : attrs) keys.insert(a.canonical_key);
  return keys;
}

// Literal double loop: reads outer, writes inner, then sorted into the
// write-major document order the detector promises.
inline std::vector<OraclePair> oracle_find(const massbind::ApiModel& model,
                                           const massbind::DetectorConfig& config) {
  struct Indexed {
    const massbind::OperationModel* op;
    std::size_t doc_index;
  };
  std::vector<Indexed> reads, writes;
  std::size_t index = 0;
  for (const auto& endpoint : model.endpoints) {
    for (const auto& op : endpoint.operations) {
      if (op.method == massbind::HttpMethod::Get) reads.push_back({&op, index});
      if (op.method == massbind::HttpMethod::Post || op.method == massbind::HttpMethod::Put ||
          op.method == massbind::HttpMethod::Patch)
        writes.push_back({&op, index});
      ++index;
    }
  }

  std::vector<std::tuple<std::size_t, std::size_t, OraclePair>> hits;
  for (const Indexed& read : reads) {
    std::set<std::string> res = oracle_keys(read.op->response_attrs);
    for (const Indexed& write : writes) {
      if (config.scope == massbind::PairScope::SamePath && read.op->path != write.op->path)
        continue;
      std::set<std::string> req = oracle_keys(write.op->request_attrs);

      bool size_ok = !config.require_strict_count || res.size() > req.size();
      if (!size_ok) continue;

      std::set<std::string> inter;
      std::set_intersection(req.begin(), req.end(), res.begin(), res.end(),
                            std::inserter(inter, inter.end()));
      std::set<std::string> uni;
      std::set_union(req.begin(), req.end(), res.begin(), res.end(),
                     std::inserter(uni, uni.end()));
      double similarity =
          uni.empty() ? 0.0 : static_cast<double>(inter.size()) / static_cast<double>(uni.size());
      if (similarity < config.threshold) continue;

      std::set<std::string> extra;
      std::set_difference(res.begin(), res.end(), req.begin(), req.end(),
                          std::inserter(extra, extra.end()));
      if (extra.empty()) continue;

      OraclePair pair{write.op->method_name, write.op->path, read.op->method_name,
                      read.op->path,         inter.size(),   uni.size(),
                      std::move(extra)};
      hits.emplace_back(write.doc_index, read.doc_index, std::move(pair));
    }
  }
  std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  std::vector<OraclePair> out;
  for (auto& hit : hits) out.push_back(std::move(std::get<2>(hit)));
  return out;
}

inline std::vector<OraclePair> project(const std::vector<massbind::CandidatePair>& pairs) {
  std::vector<OraclePair> out;
  for (const auto& pair : pairs) {
    OraclePair p{pair.write_op.method, pair.write_op.path, pair.read_op.method,
                 pair.read_op.path,    pair.similarity.shared, pair.similarity.total,
                 {}};
    for (const auto& attr : pair.candidate_attrs) p.candidate_keys.insert(attr.canonical_key);
    out.push_back(std::move(p));
  }
  return out;
}

// Small random models: up to 6 endpoints, attribute names drawn from a pool
// of 8 (all with distinct canonical keys).
inline massbind::ApiModel random_model(std::mt19937& rng) {
  static const std::vector<std::string> kNames = {"id",    "name",  "status", "owner",
                                                  "email", "title", "tags",   "secret"};
  static const std::vector<std::string> kWriteMethods = {"POST", "PUT", "PATCH", "DELETE"};

  auto pick_attrs = [&rng](massbind::AttrLocation location) {
    std::vector<massbind::AttributeRecord> attrs;
    std::uniform_int_distribution<int> count(0, 8);
    std::vector<std::string> pool = kNames;
    std::shuffle(pool.begin(), pool.end(), rng);
    int n = count(rng);
    for (int i = 0; i < n && i < static_cast<int>(pool.size()); ++i)
      attrs.push_back({pool[static_cast<std::size_t>(i)],
                       massbind::canonical_key(pool[static_cast<std::size_t>(i)]), location,
                       "/synthetic", false});
    return attrs;
  };

  massbind::ApiModel model;
  model.source_name = "synthetic";
  std::uniform_int_distribution<int> endpoint_count(1, 6);
  std::uniform_int_distribution<int> op_count(1, 3);
  std::uniform_int_distribution<int> coin(0, 3);
  int endpoints = endpoint_count(rng);
  for (int e = 0; e < endpoints; ++e) {
    massbind::EndpointModel endpoint;
    endpoint.path = "/resource" + std::to_string(e);
    int ops = op_count(rng);
    std::vector<std::string> used;
    for (int o = 0; o < ops; ++o) {
      massbind::OperationModel op;
      bool make_get = coin(rng) == 0;
      std::string method =
          make_get ? "GET" : kWriteMethods[static_cast<std::size_t>(coin(rng))];
      if (std::find(used.begin(), used.end(), method) != used.end()) continue;
      used.push_back(method);
      op.method_name = method;
      op.method = method == "GET"    ? massbind::HttpMethod::Get
                  : method == "POST" ? massbind::HttpMethod::Post
                  : method == "PUT"  ? massbind::HttpMethod::Put
                  : method == "PATCH" ? massbind::HttpMethod::Patch
                                      : massbind::HttpMethod::Delete;
      op.path = endpoint.path;
      op.request_attrs = pick_attrs(massbind::AttrLocation::Body);
      op.response_attrs = pick_attrs(massbind::AttrLocation::Body);
      endpoint.operations.push_back(std::move(op));
    }
    model.endpoints.push_back(std::move(endpoint));
  }
  model.totals.endpoint_count = model.endpoints.size();
  for (const auto& endpoint : model.endpoints)
    model.totals.operation_count += endpoint.operations.size();
  return model;
}

} // namespace testsupport

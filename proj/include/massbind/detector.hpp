#pragma once

#include "massbind/model.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace massbind {

enum class PairScope { Global, SamePath };

const char* to_string(PairScope scope) noexcept;

struct DetectorConfig {
  double threshold = 0.5;
  PairScope scope = PairScope::Global;
  bool require_strict_count = true; // response set must be strictly larger

  friend bool operator==(const DetectorConfig&, const DetectorConfig&) = default;
};

// Exact similarity ratio: |a intersect b| / |a union b|. Kept as integers so
// reports can show both the exact fraction and a rounded display value.
struct Ratio {
  std::size_t shared = 0;
  std::size_t total = 0;

  double value() const noexcept { return total == 0 ? 0.0 : static_cast<double>(shared) / static_cast<double>(total); }
  std::string display() const; // two decimals, e.g. "0.67"

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

struct OperationRef {
  std::string method;
  std::string path;

  friend bool operator==(const OperationRef&, const OperationRef&) = default;
};

// One (write operation, read operation) match: similarity at or above the
// threshold and a non-empty set of read-only candidate attributes taken
// from the read side.
struct CandidatePair {
  OperationRef write_op;
  OperationRef read_op;
  Ratio similarity;
  std::vector<AttributeRecord> candidate_attrs;
  std::size_t res_count = 0;
  std::size_t req_count = 0;

  friend bool operator==(const CandidatePair&, const CandidatePair&) = default;
};

/// |a intersect b| / |a union b|; 0 when both sets are empty.
Ratio jaccard_similarity(const std::set<std::string>& a, const std::set<std::string>& b);

/// Pairs every write operation (POST/PUT/PATCH) with every read operation
/// (GET), restricted to equal paths when scope is SamePath, and emits a
/// CandidatePair when the response key set is strictly larger than the
/// request key set, similarity >= threshold, and the difference is
/// non-empty. Output is ordered by write op then read op, in document order.
std::vector<CandidatePair> find_candidates(const ApiModel& model,
                                           const DetectorConfig& config = {});

} // namespace massbind

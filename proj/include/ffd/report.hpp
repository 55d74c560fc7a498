#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include <json.hpp>

#include "ffd/verify.hpp"

namespace ffd {

using Json = nlohmann::ordered_json;

/// Rationals are always written "p/q"; integer quantities stay JSON integers.
Json to_json(const Precondition& p);
Json to_json(const InequalityReport& r);
Json to_json(const TrichotomyReport& r);
Json to_json(const TruncationGapReport& r);
Json to_json(const PerfectPower& p);
Json to_json(const ScanReport& r);
Json to_json(const CountingReport& r);
Json to_json(const CampanaVerdict& v);
Json to_json(const DivisorCounting& d);
Json to_json(const Locus& l);

enum class BatchKind { BrownawellMasser, Proximity, CampanaTruncation };
std::optional<BatchKind> parse_batch_kind(std::string_view name);
std::string to_string(BatchKind kind);

struct BatchOptions {
  BatchKind kind = BatchKind::BrownawellMasser;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
  int max_degree = 30;
};

/// Runs `count` seeded instances concurrently and merges them in index order:
/// {"run": {...}, "instances": [...], "tallies": {...}}.
Json run_batch(const BatchOptions& options);

}  // namespace ffd

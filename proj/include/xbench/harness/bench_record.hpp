#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xbench/harness/workload.hpp"

namespace xbench::harness {

inline constexpr int kSchemaVersion = 1;

enum class Target { native, wasm };

std::string_view target_name(Target t) noexcept;

// One measured benchmark. Serialized as a JSON object with exactly these
// field names; u64 values (seed, result_checksum) are decimal strings so that
// JavaScript readers do not lose precision. timestamp and host are omitted
// when null. error is only present on records a runner could not complete.
struct BenchRecord {
  std::string workload;
  Params params;
  std::string environment;
  Target target = Target::native;
  std::uint64_t seed = 0;
  std::size_t repetitions = 0;
  std::vector<double> samples_ms;
  double mean_ms = 0;
  double std_ms = 0;
  std::uint64_t result_checksum = 0;
  std::optional<std::string> timestamp;
  std::optional<std::string> host;
  std::optional<std::string> error;

  bool operator==(const BenchRecord&) const = default;
};

// {"v": 1, "records": [...]}, two-space indent, trailing newline.
std::string records_to_json(const std::vector<BenchRecord>& records);

// Throws SchemaError on a version other than 1, missing or mistyped fields,
// or text that is not JSON.
std::vector<BenchRecord> records_from_json(std::string_view text);

// Fixed columns:
// workload,environment,target,seed,repetitions,mean_ms,std_ms,result_checksum,params,samples_ms
// params as k=v pairs and samples as values, both ';'-separated.
std::string records_to_csv(const std::vector<BenchRecord>& records);

}  // namespace xbench::harness

#pragma once

#include <cstddef>
#include <string>

#include "xbench/harness/bench_record.hpp"
#include "xbench/harness/clock.hpp"
#include "xbench/harness/workload.hpp"

namespace xbench::harness {

struct RunOptions {
  std::size_t repetitions = 10;
  std::size_t warmup = 1;
  std::string environment = "native";
  bool include_meta = true;  // timestamp and host
};

// warmup unmeasured repetitions, then `repetitions` measured ones, each
// preceded by an untimed setup(). The checksum of the last repetition is kept.
// Throws ConfigError for repetitions == 0 or when another run is in progress
// in this process; kernel errors are rethrown with the workload name attached.
BenchRecord run_workload(const WorkloadSpec& spec, Clock& clock, const RunOptions& options = {});

// Same protocol over a caller-provided workload instance.
BenchRecord run_workload(Workload& workload, const WorkloadSpec& spec, Clock& clock,
                         const RunOptions& options = {});

// ISO-8601 UTC, second resolution.
std::string utc_timestamp();
// "<sysname> <release> <machine>".
std::string host_descriptor();

}  // namespace xbench::harness

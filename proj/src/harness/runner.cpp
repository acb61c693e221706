#include "xbench/harness/runner.hpp"

#include <sys/utsname.h>

#include <atomic>
#include <chrono>
#include <ctime>

#include "xbench/errors.hpp"
#include "xbench/harness/stats.hpp"

namespace xbench::harness {

namespace {

std::atomic<bool> g_running{false};

// Only one workload may be timed per process at a time.
class RunGuard {
 public:
  RunGuard() {
    if (g_running.exchange(true)) {
      throw ConfigError("another workload is already running in this process");
    }
  }
  ~RunGuard() { g_running.store(false); }
  RunGuard(const RunGuard&) = delete;
  RunGuard& operator=(const RunGuard&) = delete;
};

}  // namespace

BenchRecord run_workload(Workload& workload, const WorkloadSpec& spec, Clock& clock,
                         const RunOptions& options) {
  if (options.repetitions == 0) throw ConfigError("repetitions must be at least 1");
  RunGuard guard;

  BenchRecord record;
  record.workload = std::string(workload_name(spec.id));
  record.params = spec.params;
  record.environment = options.environment;
  record.target = Target::native;
  record.seed = spec.seed;
  record.repetitions = options.repetitions;

  const std::uint64_t inner = spec.inner_iterations();
  try {
    for (std::size_t i = 0; i < options.warmup; ++i) {
      workload.setup(spec.seed);
      measure(workload, clock, inner);
    }
    for (std::size_t i = 0; i < options.repetitions; ++i) {
      workload.setup(spec.seed);
      const Measurement m = measure(workload, clock, inner);
      record.samples_ms.push_back(m.elapsed_ms);
      record.result_checksum = m.checksum;
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(record.workload + ": " + e.what());
  }

  const SampleStats s = stats(record.samples_ms);
  record.mean_ms = s.mean;
  record.std_ms = s.std;
  if (options.include_meta) {
    record.timestamp = utc_timestamp();
    record.host = host_descriptor();
  }
  return record;
}

BenchRecord run_workload(const WorkloadSpec& spec, Clock& clock, const RunOptions& options) {
  auto workload = make_workload(spec);
  return run_workload(*workload, spec, clock, options);
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string host_descriptor() {
  utsname u{};
  if (uname(&u) != 0) return "unknown";
  return std::string(u.sysname) + " " + u.release + " " + u.machine;
}

}  // namespace xbench::harness

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "xbench/harness/clock.hpp"

namespace xbench::harness {

enum class WorkloadId {
  fill_array_rand,
  rec_fib,
  int_compare,
  floyd_warshall,
  huffman,
  permutations,
  fft,
  mincut_single,
  mincut_expansion,
};

inline constexpr std::size_t kWorkloadCount = 9;

// Canonical order, also the row order of reports.
std::span<const WorkloadId> all_workloads() noexcept;
std::string_view workload_name(WorkloadId id) noexcept;
std::optional<WorkloadId> parse_workload(std::string_view name) noexcept;
// "fill_array_rand, rec_fib, ..." for error messages.
std::string workload_name_list();

// Integer parameters by name. Every workload has "inner_iterations".
using Params = std::map<std::string, std::int64_t>;

inline constexpr std::uint64_t kDefaultSeed = 42;

struct WorkloadSpec {
  WorkloadId id;
  Params params;
  std::uint64_t seed = kDefaultSeed;

  std::uint64_t inner_iterations() const;
};

// Full-scale defaults: 1e6 array, fib(40), 1e7 comparisons, 1000-vertex
// Floyd-Warshall, 100k Huffman and FFT (N = 1024) iterations, 9-character
// permutations, 100x100 min-cut images.
WorkloadSpec default_spec(WorkloadId id);

// Sets one parameter, rejecting names the workload does not declare and
// inner_iterations < 1. Throws ConfigError.
void set_param(WorkloadSpec& spec, std::string_view key, std::int64_t value);

// A benchmark kernel with its input preparation split out. setup() runs
// before every repetition and is not timed; iterate() is one pass of the
// timed inner loop and returns a digest of the kernel's output.
class Workload {
 public:
  virtual ~Workload() = default;
  virtual void setup(std::uint64_t seed) = 0;
  virtual std::uint64_t iterate() = 0;
};

// Throws ConfigError on unknown or out-of-range parameters.
std::unique_ptr<Workload> make_workload(const WorkloadSpec& spec);

struct Measurement {
  double elapsed_ms = 0;
  std::uint64_t checksum = 0;  // wrapping sum of iterate() results
};

// Times exactly `inner_iterations` calls of iterate().
Measurement measure(Workload& workload, Clock& clock, std::uint64_t inner_iterations);

// The fixed Huffman corpus.
std::string_view lorem_ipsum() noexcept;

}  // namespace xbench::harness

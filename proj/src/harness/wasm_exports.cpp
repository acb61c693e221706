#include "xbench/harness/wasm_exports.h"

#include <initializer_list>
#include <utility>

#include "xbench/harness/clock.hpp"
#include "xbench/harness/workload.hpp"

#if defined(__wasm__)
#define XBENCH_EXPORT(name) __attribute__((export_name(#name)))

// libc++ reports hardening failures through this hook, which by default
// formats to stderr and drags WASI fd_* imports into the module.
namespace std {
inline namespace __1 {
[[noreturn]] void __libcpp_verbose_abort(char const*, ...) noexcept { __builtin_trap(); }
}  // namespace __1
}  // namespace std
#else
#define XBENCH_EXPORT(name)
#endif

namespace {

using xbench::harness::WorkloadId;

std::uint64_t g_checksum = 0;

double run_one(WorkloadId id, std::uint32_t seed_lo, std::uint32_t seed_hi, std::uint32_t inner,
               std::initializer_list<std::pair<const char*, std::uint32_t>> params) {
  xbench::harness::WorkloadSpec spec = xbench::harness::default_spec(id);
  spec.seed = (std::uint64_t{seed_hi} << 32) | seed_lo;
  spec.params["inner_iterations"] = inner;
  for (const auto& [key, value] : params) spec.params[key] = value;

  auto workload = xbench::harness::make_workload(spec);
  workload->setup(spec.seed);
  xbench::harness::HostClock clock;
  const auto m = xbench::harness::measure(*workload, clock, spec.inner_iterations());
  g_checksum = m.checksum;
  return m.elapsed_ms;
}

}  // namespace

extern "C" {

XBENCH_EXPORT(run_fill_array_rand)
double run_fill_array_rand(std::uint32_t seed_lo, std::uint32_t seed_hi, std::uint32_t inner,
                           std::uint32_t n) {
  return run_one(WorkloadId::fill_array_rand, seed_lo, seed_hi, inner, {{"n", n}});
}

XBENCH_EXPORT(run_rec_fib)
double run_rec_fib(std::uint32_t seed_lo, std::uint32_t seed_hi, std::uint32_t inner,
                   std::uint32_t n) {
  return run_one(WorkloadId::rec_fib, seed_lo, seed_hi, inner, {{"n", n}});
}

XBENCH_EXPORT(run_int_compare)
double run_int_compare(std::uint32_t seed_lo, std::uint32_t seed_hi, std::uint32_t inner,
                       std::uint32_t n) {
  return run_one(WorkloadId::int_compare, seed_lo, seed_hi, inner, {{"n", n}});
}

XBENCH_EXPORT(run_floyd_warshall)
double run_floyd_warshall(std::uint32_t seed_lo, std::uint32_t seed_hi, std::uint32_t inner,
                          std::uint32_t vertices, std::uint32_t max_weight) {
  return run_one(WorkloadId::floyd_warshall, seed_lo, seed_hi, inner,
                 {{"vertices", vertices}, {"max_weight", max_weight}});
}

XBENCH_EXPORT(run_huffman)
double run_huffman(std::uint32_t seed_lo, std::uint32_t seed_hi, std::uint32_t inner) {
  return run_one(WorkloadId::huffman, seed_lo, seed_hi, inner, {});
}

XBENCH_EXPORT(run_permutations)
double run_permutations(std::uint32_t seed_lo, std::uint32_t seed_hi, std::uint32_t inner,
                        std::uint32_t n) {
  return run_one(WorkloadId::permutations, seed_lo, seed_hi, inner, {{"n", n}});
}

XBENCH_EXPORT(run_fft)
double run_fft(std::uint32_t seed_lo, std::uint32_t seed_hi, std::uint32_t inner,
               std::uint32_t n) {
  return run_one(WorkloadId::fft, seed_lo, seed_hi, inner, {{"n", n}});
}

XBENCH_EXPORT(run_mincut_single)
double run_mincut_single(std::uint32_t seed_lo, std::uint32_t seed_hi, std::uint32_t inner,
                         std::uint32_t size, std::uint32_t threshold, std::uint32_t lambda) {
  return run_one(WorkloadId::mincut_single, seed_lo, seed_hi, inner,
                 {{"size", size}, {"threshold", threshold}, {"lambda", lambda}});
}

XBENCH_EXPORT(run_mincut_expansion)
double run_mincut_expansion(std::uint32_t seed_lo, std::uint32_t seed_hi, std::uint32_t inner,
                            std::uint32_t size, std::uint32_t threshold, std::uint32_t lambda) {
  return run_one(WorkloadId::mincut_expansion, seed_lo, seed_hi, inner,
                 {{"size", size}, {"threshold", threshold}, {"lambda", lambda}});
}

XBENCH_EXPORT(get_checksum)
std::uint32_t get_checksum() { return static_cast<std::uint32_t>(g_checksum); }

XBENCH_EXPORT(get_checksum_hi)
std::uint32_t get_checksum_hi() { return static_cast<std::uint32_t>(g_checksum >> 32); }

}

#include "xbench/harness/clock.hpp"

#if defined(__wasm__)

extern "C" __attribute__((import_module("env"), import_name("now_ms"))) double xbench_env_now_ms();

namespace xbench::harness {
double HostClock::now_ms() { return xbench_env_now_ms(); }
}  // namespace xbench::harness

#else

#include <chrono>

namespace xbench::harness {

double HostClock::now_ms() {
  using ms = std::chrono::duration<double, std::milli>;
  return ms(std::chrono::steady_clock::now().time_since_epoch()).count();
}

}  // namespace xbench::harness

#endif

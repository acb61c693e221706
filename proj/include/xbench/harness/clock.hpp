#pragma once

namespace xbench::harness {

// Source of wall time in milliseconds. Must be monotonic non-decreasing.
class Clock {
 public:
  virtual ~Clock() = default;
  virtual double now_ms() = 0;
};

// Platform monotonic clock on native builds; the imported env.now_ms on WASM.
class HostClock final : public Clock {
 public:
  double now_ms() override;
};

}  // namespace xbench::harness

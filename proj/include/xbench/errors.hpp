#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace xbench {

// Base for every error the library reports. Native builds throw these; the
// WASM build is compiled without exceptions and traps instead (see raise()).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside an operation's mathematical domain (e.g. fib(61), FFT of 3 samples).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Matrix or buffer of the wrong dimensions.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class EncodingError : public Error {
 public:
  using Error::Error;
};

class DecodingError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. line() is 1-based; 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Bad workload id, bad parameter, refused concurrent run.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Duplicate (workload, environment) cells when building a comparison table.
class AggregationError : public Error {
 public:
  using Error::Error;
};

// Result file with an unsupported schema version or missing fields.
class SchemaError : public Error {
 public:
  using Error::Error;
};

template <class E, class... Args>
[[noreturn]] inline void raise(Args&&... args) {
#if defined(XBENCH_NO_EXCEPTIONS)
  (void)sizeof...(args);
  __builtin_trap();
#else
  throw E(std::forward<Args>(args)...);
#endif
}

}  // namespace xbench

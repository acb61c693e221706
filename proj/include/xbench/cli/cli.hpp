#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xbench::cli {

// Process exit codes. Stable; documented in the README.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,         // kernel or I/O failure not covered below
  kUsage = 2,           // bad flags, unknown workload or parameter
  kUnwritable = 3,      // output path cannot be written
  kSchemaMismatch = 4,  // result file with wrong schema version or shape
  kBadInput = 5,        // malformed PGM image
};

// Entry point of the xbench tool. args excludes the program name. Data goes to
// out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xbench::cli

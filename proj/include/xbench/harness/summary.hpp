#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "xbench/harness/bench_record.hpp"

namespace xbench::harness {

struct SummaryCell {
  double mean_ms = 0;
  double std_ms = 0;
  std::size_t repetitions = 0;
  bool failed = false;
};

// Rows are workloads, columns environment tags.
struct SummaryTable {
  std::vector<std::string> workloads;
  std::vector<std::string> environments;
  std::string baseline;
  std::vector<std::vector<std::optional<SummaryCell>>> cells;  // [row][column]

  // baseline mean / environment mean; empty when either cell is missing,
  // failed, or the environment mean is zero.
  std::optional<double> speedup(std::size_t row, std::size_t column) const;
};

struct SummaryOptions {
  std::optional<std::string> baseline;  // defaults to the first environment seen
  bool merge = false;                   // pool samples of duplicate cells
};

// Throws DomainError on no records, AggregationError on duplicate
// (workload, environment) pairs without merge, ConfigError on an unknown baseline.
SummaryTable summarize(const std::vector<BenchRecord>& records, const SummaryOptions& options = {});

// | workload | <env>... | speedup <env>... |, cells "mean (std)" in ms.
std::string render_markdown(const SummaryTable& table);

// Long format, columns workload,environment,mean_ms,std_ms,repetitions,speedup.
std::string render_csv(const SummaryTable& table);

}  // namespace xbench::harness

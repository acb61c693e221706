#include "xbench/harness/summary.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "csv.hpp"
#include "xbench/errors.hpp"
#include "xbench/harness/stats.hpp"

namespace xbench::harness {

std::optional<double> SummaryTable::speedup(std::size_t row, std::size_t column) const {
  const auto base_it = std::find(environments.begin(), environments.end(), baseline);
  if (base_it == environments.end()) return std::nullopt;
  const auto& base = cells[row][static_cast<std::size_t>(base_it - environments.begin())];
  const auto& cell = cells[row][column];
  if (!base || !cell || base->failed || cell->failed || cell->mean_ms <= 0) return std::nullopt;
  return base->mean_ms / cell->mean_ms;
}

namespace {

std::size_t index_of(std::vector<std::string>& list, const std::string& value) {
  const auto it = std::find(list.begin(), list.end(), value);
  if (it != list.end()) return static_cast<std::size_t>(it - list.begin());
  list.push_back(value);
  return list.size() - 1;
}

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

SummaryTable summarize(const std::vector<BenchRecord>& records, const SummaryOptions& options) {
  if (records.empty()) raise<DomainError>("summarize: no records");

  SummaryTable table;
  // Known workloads first in canonical order, then anything else as seen.
  for (const WorkloadId id : all_workloads()) {
    const std::string name(workload_name(id));
    if (std::any_of(records.begin(), records.end(),
                    [&](const BenchRecord& r) { return r.workload == name; })) {
      table.workloads.push_back(name);
    }
  }
  for (const auto& r : records) {
    index_of(table.workloads, r.workload);
    index_of(table.environments, r.environment);
  }

  std::map<std::pair<std::size_t, std::size_t>, std::vector<const BenchRecord*>> groups;
  for (const auto& r : records) {
    const auto row = index_of(table.workloads, r.workload);
    const auto col = index_of(table.environments, r.environment);
    auto& group = groups[{row, col}];
    if (!group.empty() && !options.merge) {
      raise<AggregationError>("duplicate results for workload '" + r.workload +
                              "' in environment '" + r.environment + "' (use merge to pool them)");
    }
    group.push_back(&r);
  }

  table.cells.assign(table.workloads.size(),
                     std::vector<std::optional<SummaryCell>>(table.environments.size()));
  for (const auto& [key, group] : groups) {
    SummaryCell cell;
    std::vector<double> pooled;
    for (const BenchRecord* r : group) {
      if (r->error) {
        cell.failed = true;
        continue;
      }
      pooled.insert(pooled.end(), r->samples_ms.begin(), r->samples_ms.end());
    }
    if (!pooled.empty()) {
      const SampleStats s = stats(pooled);
      cell = {s.mean, s.std, pooled.size(), false};
    }
    table.cells[key.first][key.second] = cell;
  }

  table.baseline = options.baseline.value_or(table.environments.front());
  if (std::find(table.environments.begin(), table.environments.end(), table.baseline) ==
      table.environments.end()) {
    raise<ConfigError>("baseline environment '" + table.baseline + "' not present in the results");
  }
  return table;
}

std::string render_markdown(const SummaryTable& table) {
  std::string out = "| workload |";
  std::string rule = "|---|";
  for (const auto& env : table.environments) {
    out += " " + env + " |";
    rule += "---:|";
  }
  for (const auto& env : table.environments) {
    out += " speedup " + env + " |";
    rule += "---:|";
  }
  out += "\n" + rule + "\n";

  for (std::size_t row = 0; row < table.workloads.size(); ++row) {
    out += "| " + table.workloads[row] + " |";
    for (std::size_t col = 0; col < table.environments.size(); ++col) {
      const auto& cell = table.cells[row][col];
      if (!cell) {
        out += " - |";
      } else if (cell->failed) {
        out += " failed |";
      } else {
        out += " " + fixed3(cell->mean_ms) + " (" + fixed3(cell->std_ms) + ") |";
      }
    }
    for (std::size_t col = 0; col < table.environments.size(); ++col) {
      const auto s = table.speedup(row, col);
      out += s ? " " + fixed3(*s) + " |" : " - |";
    }
    out += "\n";
  }
  out += "\nTimes in ms as mean (population std); speedup = " + table.baseline +
         " mean / column mean.\n";
  return out;
}

std::string render_csv(const SummaryTable& table) {
  std::string out = "workload,environment,mean_ms,std_ms,repetitions,speedup\n";
  for (std::size_t row = 0; row < table.workloads.size(); ++row) {
    for (std::size_t col = 0; col < table.environments.size(); ++col) {
      const auto& cell = table.cells[row][col];
      if (!cell) continue;
      out += csv_field(table.workloads[row]) + "," + csv_field(table.environments[col]) + ",";
      if (cell->failed) {
        out += ",,0,\n";
        continue;
      }
      const auto s = table.speedup(row, col);
      out += fixed3(cell->mean_ms) + "," + fixed3(cell->std_ms) + "," +
             std::to_string(cell->repetitions) + "," + (s ? fixed3(*s) : std::string()) + "\n";
    }
  }
  return out;
}

}  // namespace xbench::harness

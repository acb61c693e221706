#include "xbench/harness/stats.hpp"

#include <cmath>

#include "xbench/errors.hpp"

namespace xbench::harness {

SampleStats stats(std::span<const double> samples) {
  if (samples.empty()) raise<DomainError>("stats: no samples");
  const auto n = static_cast<double>(samples.size());
  double sum = 0;
  for (double s : samples) sum += s;
  const double mean = sum / n;
  double sq = 0;
  for (double s : samples) sq += (s - mean) * (s - mean);
  return {mean, std::sqrt(sq / n)};
}

}  // namespace xbench::harness

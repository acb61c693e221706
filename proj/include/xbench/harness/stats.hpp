#pragma once

#include <span>

namespace xbench::harness {

struct SampleStats {
  double mean = 0;
  double std = 0;  // population standard deviation (divides by n)
};

// Throws DomainError on an empty sample list.
SampleStats stats(std::span<const double> samples);

}  // namespace xbench::harness

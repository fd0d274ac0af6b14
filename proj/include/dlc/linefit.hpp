#pragma once

#include <cstddef>
#include <span>

namespace dlc {

struct SamplePair {
  double x;
  double y;
};

struct FitResult {
  double slope;
  double intercept;
  double r_squared;
  std::size_t n_samples;
};

/// Ordinary least squares for y ~ slope*x + intercept, mean-centered for
/// stability. Requires at least two samples with non-identical x.
FitResult fit_line(std::span<const SamplePair> samples);

}  // namespace dlc

#include "dlc/linefit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dlc {

FitResult fit_line(std::span<const SamplePair> samples) {
  const std::size_t n = samples.size();
  if (n < 2) {
    throw std::invalid_argument("need at least two samples");
  }
  for (const SamplePair& s : samples) {
    if (!std::isfinite(s.x) || !std::isfinite(s.y)) {
      throw std::invalid_argument("samples must be finite");
    }
  }

  double mean_x = 0.0, mean_y = 0.0;
  for (const SamplePair& s : samples) {
    mean_x += s.x;
    mean_y += s.y;
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const SamplePair& s : samples) {
    const double dx = s.x - mean_x;
    const double dy = s.y - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) {
    throw std::invalid_argument("all x values identical; line is degenerate");
  }

  const double slope = sxy / sxx;
  const double intercept = mean_y - slope * mean_x;
  // Constant y is fit exactly by the horizontal line.
  const double r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return {slope, intercept, std::clamp(r2, 0.0, 1.0),
          static_cast<std::size_t>(n)};
}

}  // namespace dlc

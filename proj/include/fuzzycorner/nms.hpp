#pragma once

#include <vector>

namespace fuzzycorner {

struct Corner {
  int x = 0;  // column
  int y = 0;  // row
  double score = 0.0;

  bool operator==(const Corner&) const = default;
};

using CornerSet = std::vector<Corner>;

// Dense per-pixel score grid, row-major. Used for fuzzy cornerness and Harris response.
struct ScoreMap {
  int width = 0;
  int height = 0;
  std::vector<double> values;

  ScoreMap() = default;
  ScoreMap(int w, int h, double fill = 0.0)
      : width(w), height(h), values(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

  double at(int x, int y) const { return values[static_cast<std::size_t>(y) * width + x]; }
  double& at(int x, int y) { return values[static_cast<std::size_t>(y) * width + x]; }
};

/// Keeps pixels whose score is >= threshold and maximal within Chebyshev distance
/// `radius`. A pixel is also dropped when an equal score precedes it in raster order
/// inside its window, so any two survivors are more than `radius` apart.
/// Output is in raster order.
CornerSet suppress_non_maxima(const ScoreMap& scores, double threshold, int radius);

}  // namespace fuzzycorner

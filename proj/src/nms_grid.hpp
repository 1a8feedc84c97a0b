#pragma once

#include <algorithm>
#include <cstddef>

#include "fuzzycorner/nms.hpp"

namespace fuzzycorner::detail {

// Non-maximum suppression over any ordered cell type. `score` maps a surviving cell
// value to the reported corner score.
template <typename T, typename ScoreFn>
CornerSet suppress_grid(const T* values, int width, int height, T threshold, int radius, ScoreFn score) {
  auto at = [&](int x, int y) { return values[static_cast<std::size_t>(y) * width + x]; };
  auto is_local_maximum = [&](int x, int y, T v) {
    const int y0 = std::max(0, y - radius);
    const int y1 = std::min(height - 1, y + radius);
    const int x0 = std::max(0, x - radius);
    const int x1 = std::min(width - 1, x + radius);
    for (int yy = y0; yy <= y1; ++yy) {
      for (int xx = x0; xx <= x1; ++xx) {
        const T w = at(xx, yy);
        if (w > v) return false;
        if (w == v && (yy < y || (yy == y && xx < x))) return false;
      }
    }
    return true;
  };

  CornerSet out;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const T v = at(x, y);
      if (v >= threshold && is_local_maximum(x, y, v)) out.push_back({x, y, score(v)});
    }
  }
  return out;
}

}  // namespace fuzzycorner::detail

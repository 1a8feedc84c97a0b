#include "fuzzycorner/nms.hpp"

#include "nms_grid.hpp"

namespace fuzzycorner {

CornerSet suppress_non_maxima(const ScoreMap& scores, double threshold, int radius) {
  return detail::suppress_grid(scores.values.data(), scores.width, scores.height, threshold, radius,
                               [](double v) { return v; });
}

}  // namespace fuzzycorner

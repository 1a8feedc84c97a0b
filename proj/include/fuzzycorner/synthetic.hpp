#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fuzzycorner/image.hpp"

namespace fuzzycorner {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

struct Scene {
  std::string name;
  GrayImage image;
  std::vector<Point2> corners;  // geometric corner positions, pixel-edge coordinates
};

// Filled axis-aligned rectangle covering columns [x0, x0 + w) and rows [y0, y0 + h).
Scene rectangle_scene(int width, int height, int x0, int y0, int w, int h, std::uint8_t background,
                      std::uint8_t foreground);

// 64x64 with a 30x30 block of 200 on 50: the standard test image.
Scene standard_rectangle();

// Rectangles, L-shapes and crossing bars in rotation. Background in [40, 80],
// contrast in [80, 130], so every pixel stays within [40, 210].
std::vector<Scene> make_corpus(int count, int size, std::uint64_t seed);

}  // namespace fuzzycorner

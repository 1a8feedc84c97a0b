#include "fuzzycorner/synthetic.hpp"

#include <cstdio>
#include <random>

#include "random.hpp"

namespace fuzzycorner {

namespace {

void fill(GrayImage& img, int x0, int y0, int x1, int y1, std::uint8_t value) {
  for (int y = y0; y < y1; ++y) {
    for (int x = x0; x < x1; ++x) img.at(x, y) = value;
  }
}

// Polygon vertices given on the pixel-edge lattice; pixel centers sit at integers.
std::vector<Point2> to_pixel_coords(std::initializer_list<std::pair<int, int>> vertices) {
  std::vector<Point2> out;
  for (auto [x, y] : vertices) out.push_back({x - 0.5, y - 0.5});
  return out;
}

}  // namespace

Scene rectangle_scene(int width, int height, int x0, int y0, int w, int h, std::uint8_t background,
                      std::uint8_t foreground) {
  Scene s{"rectangle", GrayImage(width, height, background), {}};
  fill(s.image, x0, y0, x0 + w, y0 + h, foreground);
  s.corners = to_pixel_coords({{x0, y0}, {x0 + w, y0}, {x0 + w, y0 + h}, {x0, y0 + h}});
  return s;
}

Scene standard_rectangle() { return rectangle_scene(64, 64, 17, 17, 30, 30, 50, 200); }

std::vector<Scene> make_corpus(int count, int size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Scene> scenes;
  const int margin = size / 8;
  for (int i = 0; i < count; ++i) {
    const auto bg = static_cast<std::uint8_t>(detail::uniform_int(rng, 40, 80));
    const auto fg = static_cast<std::uint8_t>(bg + detail::uniform_int(rng, 80, 130));
    const int x0 = detail::uniform_int(rng, margin, size / 3);
    const int y0 = detail::uniform_int(rng, margin, size / 3);
    const int x1 = detail::uniform_int(rng, 2 * size / 3, size - margin);
    const int y1 = detail::uniform_int(rng, 2 * size / 3, size - margin);
    const int bar = detail::uniform_int(rng, size / 6, size / 4);

    Scene s;
    s.image = GrayImage(size, size, bg);
    char name[32];
    switch (i % 3) {
      case 0:
        std::snprintf(name, sizeof name, "scene%02d_rect", i);
        fill(s.image, x0, y0, x1, y1, fg);
        s.corners = to_pixel_coords({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
        break;
      case 1:
        std::snprintf(name, sizeof name, "scene%02d_lshape", i);
        fill(s.image, x0, y0, x0 + bar, y1, fg);
        fill(s.image, x0, y1 - bar, x1, y1, fg);
        s.corners = to_pixel_coords(
            {{x0, y0}, {x0 + bar, y0}, {x0 + bar, y1 - bar}, {x1, y1 - bar}, {x1, y1}, {x0, y1}});
        break;
      default: {
        std::snprintf(name, sizeof name, "scene%02d_cross", i);
        const int cx = (x0 + x1) / 2;
        const int cy = (y0 + y1) / 2;
        const int a = cx - bar / 2, b = a + bar;
        const int c = cy - bar / 2, d = c + bar;
        fill(s.image, a, y0, b, y1, fg);
        fill(s.image, x0, c, x1, d, fg);
        s.corners = to_pixel_coords({{a, y0}, {b, y0}, {b, c}, {x1, c}, {x1, d}, {b, d},
                                     {b, y1}, {a, y1}, {a, d}, {x0, d}, {x0, c}, {a, c}});
        break;
      }
    }
    s.name = name;
    scenes.push_back(std::move(s));
  }
  return scenes;
}

}  // namespace fuzzycorner

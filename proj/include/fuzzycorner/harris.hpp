#pragma once

#include <vector>

#include "fuzzycorner/image.hpp"
#include "fuzzycorner/nms.hpp"

namespace fuzzycorner {

// Harris baseline: 5-tap derivative kernel [-2 -1 0 1 2], 7x7 Gaussian window
// (sigma 2) on the gradient products, R = det(M) - k * trace(M)^2.
struct HarrisParams {
  double k = 0.06;
  int window = 7;
  double sigma = 2.0;
  double response_frac = 0.01;  // threshold = response_frac * max(R)
  int h = 10;                   // NMS window, shared with the fuzzy detector

  int radius() const { return h / 2; }
  void validate() const;  // throws std::invalid_argument
};

struct Gradients {
  int width = 0;
  int height = 0;
  std::vector<double> gx;
  std::vector<double> gy;

  double x_at(int x, int y) const { return gx[static_cast<std::size_t>(y) * width + x]; }
  double y_at(int x, int y) const { return gy[static_cast<std::size_t>(y) * width + x]; }
};

// Zero where the kernel overhangs the image. Requires at least 5x5.
Gradients gradients(const GrayImage& image);

// Normalized (sum 1) square Gaussian of odd size.
std::vector<double> gaussian_window(int size, double sigma);

ScoreMap harris_response(const GrayImage& image, const HarrisParams& params, int jobs = 1);

CornerSet harris_detect(const GrayImage& image, const HarrisParams& params, int jobs = 1);

}  // namespace fuzzycorner

#include "fuzzycorner/harris.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "parallel.hpp"

namespace fuzzycorner {

namespace {
constexpr int kDerivative[5] = {-2, -1, 0, 1, 2};
}

void HarrisParams::validate() const {
  if (!(k > 0.0)) throw std::invalid_argument("k must be positive");
  if (window < 3 || window % 2 == 0) throw std::invalid_argument("Gaussian window must be odd and >= 3");
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  if (!(response_frac > 0.0 && response_frac < 1.0)) {
    throw std::invalid_argument("response_frac out of range (0, 1)");
  }
  if (h < 1) throw std::invalid_argument("H must be at least 1");
}

Gradients gradients(const GrayImage& image) {
  if (image.width() < 5 || image.height() < 5) {
    throw std::invalid_argument("image must be at least 5x5 for gradients");
  }
  const int w = image.width();
  const int h = image.height();
  Gradients g{w, h, std::vector<double>(static_cast<std::size_t>(w) * h, 0.0),
              std::vector<double>(static_cast<std::size_t>(w) * h, 0.0)};
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * w + x;
      if (x >= 2 && x < w - 2) {
        int acc = 0;
        for (int t = 0; t < 5; ++t) acc += kDerivative[t] * image.at(x + t - 2, y);
        g.gx[i] = acc;
      }
      if (y >= 2 && y < h - 2) {
        int acc = 0;
        for (int t = 0; t < 5; ++t) acc += kDerivative[t] * image.at(x, y + t - 2);
        g.gy[i] = acc;
      }
    }
  }
  return g;
}

std::vector<double> gaussian_window(int size, double sigma) {
  if (size < 1 || size % 2 == 0) throw std::invalid_argument("Gaussian window must be odd");
  const int half = size / 2;
  std::vector<double> kernel(static_cast<std::size_t>(size) * size);
  double sum = 0.0;
  for (int dy = -half; dy <= half; ++dy) {
    for (int dx = -half; dx <= half; ++dx) {
      const double v = std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
      kernel[static_cast<std::size_t>(dy + half) * size + (dx + half)] = v;
      sum += v;
    }
  }
  for (double& v : kernel) v /= sum;
  return kernel;
}

ScoreMap harris_response(const GrayImage& image, const HarrisParams& params, int jobs) {
  params.validate();
  const Gradients g = gradients(image);
  const int w = g.width;
  const int h = g.height;
  const std::size_t n = static_cast<std::size_t>(w) * h;

  std::vector<double> xx(n), yy(n), xy(n);
  for (std::size_t i = 0; i < n; ++i) {
    xx[i] = g.gx[i] * g.gx[i];
    yy[i] = g.gy[i] * g.gy[i];
    xy[i] = g.gx[i] * g.gy[i];
  }

  const int size = params.window;
  const int half = size / 2;
  const std::vector<double> kernel = gaussian_window(size, params.sigma);

  ScoreMap response(w, h);
  detail::parallel_rows(0, h, jobs, [&](int row_begin, int row_end) {
    for (int y = row_begin; y < row_end; ++y) {
      for (int x = 0; x < w; ++x) {
        double a = 0.0, b = 0.0, c = 0.0;
        for (int dy = -half; dy <= half; ++dy) {
          const int sy = y + dy;
          if (sy < 0 || sy >= h) continue;
          for (int dx = -half; dx <= half; ++dx) {
            const int sx = x + dx;
            if (sx < 0 || sx >= w) continue;
            const double k = kernel[static_cast<std::size_t>(dy + half) * size + (dx + half)];
            const std::size_t i = static_cast<std::size_t>(sy) * w + sx;
            a += k * xx[i];
            b += k * yy[i];
            c += k * xy[i];
          }
        }
        const double trace = a + b;
        response.at(x, y) = (a * b - c * c) - params.k * trace * trace;
      }
    }
  });
  return response;
}

CornerSet harris_detect(const GrayImage& image, const HarrisParams& params, int jobs) {
  const ScoreMap response = harris_response(image, params, jobs);
  const double peak = *std::max_element(response.values.begin(), response.values.end());
  if (!(peak > 0.0)) return {};
  return suppress_non_maxima(response, params.response_frac * peak, params.radius());
}

}  // namespace fuzzycorner

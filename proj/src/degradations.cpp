#include "fuzzycorner/degradations.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "random.hpp"

namespace fuzzycorner {

GrayImage brighten(const GrayImage& image, int amount) {
  if (amount < 0) throw std::invalid_argument("brighten amount must be >= 0");
  GrayImage out = image;
  for (auto& p : out.pixels()) p = static_cast<std::uint8_t>(std::min(p + amount, 255));
  return out;
}

GrayImage darken(const GrayImage& image, int amount) {
  if (amount < 0) throw std::invalid_argument("darken amount must be >= 0");
  GrayImage out = image;
  for (auto& p : out.pixels()) p = static_cast<std::uint8_t>(std::max(p - amount, 0));
  return out;
}

GrayImage blur(const GrayImage& image, int kernel) {
  if (kernel < 3 || kernel % 2 == 0) throw std::invalid_argument("kernel must be odd and >= 3");
  if (kernel > image.width() || kernel > image.height()) {
    throw std::invalid_argument("kernel larger than image");
  }
  const int w = image.width();
  const int h = image.height();
  const int half = kernel / 2;
  const int area = kernel * kernel;

  // separable integer sums; edge replication via clamped coordinates
  std::vector<int> rows(static_cast<std::size_t>(w) * h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      int acc = 0;
      for (int d = -half; d <= half; ++d) acc += image.at(std::clamp(x + d, 0, w - 1), y);
      rows[static_cast<std::size_t>(y) * w + x] = acc;
    }
  }
  GrayImage out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      int acc = 0;
      for (int d = -half; d <= half; ++d) acc += rows[static_cast<std::size_t>(std::clamp(y + d, 0, h - 1)) * w + x];
      out.at(x, y) = static_cast<std::uint8_t>((acc + area / 2) / area);
    }
  }
  return out;
}

GrayImage impulse_noise(const GrayImage& image, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("density must lie in [0, 1]");
  GrayImage out = image;
  auto px = out.pixels();
  const std::size_t n = px.size();
  const auto hits = static_cast<std::size_t>(std::llround(density * static_cast<double>(n)));

  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  for (std::size_t i = 0; i < hits; ++i) {
    const std::size_t j = i + detail::bounded(rng, n - i);
    std::swap(order[i], order[j]);
    px[order[i]] = (rng() >> 63) ? 255 : 0;
  }
  return out;
}

std::string_view to_string(DegradeKind kind) {
  switch (kind) {
    case DegradeKind::Brighten: return "brighten";
    case DegradeKind::Darken: return "darken";
    case DegradeKind::Blur: return "blur";
    case DegradeKind::Impulse: return "impulse";
  }
  return "unknown";
}

std::optional<DegradeKind> parse_degrade_kind(std::string_view name) {
  for (auto k : {DegradeKind::Brighten, DegradeKind::Darken, DegradeKind::Blur, DegradeKind::Impulse}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

DegradeSpec DegradeSpec::defaults(DegradeKind kind) {
  switch (kind) {
    case DegradeKind::Brighten: return {kind, 80, 0};
    case DegradeKind::Darken: return {kind, 40, 0};
    case DegradeKind::Blur: return {kind, 5, 0};
    case DegradeKind::Impulse: return {kind, 0.10, 0};
  }
  return {};
}

void DegradeSpec::validate() const {
  switch (kind) {
    case DegradeKind::Brighten:
    case DegradeKind::Darken:
      if (amount < 0 || amount != std::floor(amount)) {
        throw std::invalid_argument("amount must be a non-negative integer");
      }
      break;
    case DegradeKind::Blur:
      if (amount != std::floor(amount) || static_cast<long>(amount) % 2 == 0) {
        throw std::invalid_argument("kernel must be odd");
      }
      if (amount < 3) throw std::invalid_argument("kernel must be >= 3");
      break;
    case DegradeKind::Impulse:
      if (!(amount >= 0.0 && amount <= 1.0)) throw std::invalid_argument("density must lie in [0, 1]");
      break;
  }
}

GrayImage DegradeSpec::apply(const GrayImage& image) const {
  validate();
  switch (kind) {
    case DegradeKind::Brighten: return brighten(image, static_cast<int>(amount));
    case DegradeKind::Darken: return darken(image, static_cast<int>(amount));
    case DegradeKind::Blur: return blur(image, static_cast<int>(amount));
    case DegradeKind::Impulse: return impulse_noise(image, amount, seed);
  }
  return image;
}

}  // namespace fuzzycorner

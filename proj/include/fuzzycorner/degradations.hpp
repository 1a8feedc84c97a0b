#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fuzzycorner/image.hpp"

namespace fuzzycorner {

GrayImage brighten(const GrayImage& image, int amount);
GrayImage darken(const GrayImage& image, int amount);

// Box mean of odd size, edge-replicated borders, rounded to nearest.
GrayImage blur(const GrayImage& image, int kernel);

// Salt-and-pepper: exactly round(density * pixels) distinct pixels set to 0 or 255
// with equal probability. Reproducible for a given seed.
GrayImage impulse_noise(const GrayImage& image, double density, std::uint64_t seed);

enum class DegradeKind { Brighten, Darken, Blur, Impulse };

std::string_view to_string(DegradeKind kind);
std::optional<DegradeKind> parse_degrade_kind(std::string_view name);

struct DegradeSpec {
  DegradeKind kind = DegradeKind::Brighten;
  // gray levels (brighten/darken), kernel size (blur) or density (impulse)
  double amount = 80;
  std::uint64_t seed = 0;

  static DegradeSpec defaults(DegradeKind kind);
  void validate() const;  // throws std::invalid_argument
  GrayImage apply(const GrayImage& image) const;
};

}  // namespace fuzzycorner

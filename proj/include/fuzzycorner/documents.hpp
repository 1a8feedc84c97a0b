#pragma once

#include <string>
#include <string_view>

#include "fuzzycorner/degradations.hpp"
#include "fuzzycorner/evaluation.hpp"

namespace fuzzycorner {

// {image, width, height, detector, params, corners: [{x, y, score}]}
std::string corner_document(std::string_view image_name, const GrayImage& image, const DetectorConfig& detector,
                            const CornerSet& corners);

struct CornerDocument {
  std::string image;
  int width = 0;
  int height = 0;
  std::string detector;
  CornerSet corners;
};

CornerDocument parse_corner_document(std::string_view text);

// Plus-shaped marks with 3 px arms, drawn at 255.
GrayImage draw_overlay(const GrayImage& image, const CornerSet& corners);

// Sidecar record written next to a degraded image.
std::string degrade_sidecar(const DegradeSpec& spec, std::string_view input, std::string_view output);

}  // namespace fuzzycorner

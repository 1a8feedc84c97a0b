#include "fuzzycorner/documents.hpp"

#include "json.hpp"

namespace fuzzycorner {

using nlohmann::json;

std::string corner_document(std::string_view image_name, const GrayImage& image, const DetectorConfig& detector,
                            const CornerSet& corners) {
  json doc;
  doc["image"] = image_name;
  doc["width"] = image.width();
  doc["height"] = image.height();
  doc["detector"] = detector.name();
  if (detector.kind == DetectorKind::Fuzzy) {
    doc["params"] = {{"t_h", detector.fuzzy.t_h}, {"t_c", detector.fuzzy.t_c}, {"h", detector.fuzzy.h}};
  } else {
    const auto& p = detector.harris;
    doc["params"] = {{"k", p.k},
                     {"window", p.window},
                     {"sigma", p.sigma},
                     {"response_frac", p.response_frac},
                     {"h", p.h}};
  }
  json list = json::array();
  for (const auto& c : corners) list.push_back({{"x", c.x}, {"y", c.y}, {"score", c.score}});
  doc["corners"] = std::move(list);
  return doc.dump(2) + "\n";
}

CornerDocument parse_corner_document(std::string_view text) {
  const json doc = json::parse(text);
  CornerDocument out;
  out.image = doc.at("image").get<std::string>();
  out.width = doc.at("width").get<int>();
  out.height = doc.at("height").get<int>();
  out.detector = doc.at("detector").get<std::string>();
  for (const auto& c : doc.at("corners")) {
    out.corners.push_back({c.at("x").get<int>(), c.at("y").get<int>(), c.at("score").get<double>()});
  }
  return out;
}

GrayImage draw_overlay(const GrayImage& image, const CornerSet& corners) {
  constexpr int arm = 3;
  GrayImage out = image;
  auto plot = [&out](int x, int y) {
    if (x >= 0 && y >= 0 && x < out.width() && y < out.height()) out.at(x, y) = 255;
  };
  for (const auto& c : corners) {
    for (int d = -arm; d <= arm; ++d) {
      plot(c.x + d, c.y);
      plot(c.x, c.y + d);
    }
  }
  return out;
}

std::string degrade_sidecar(const DegradeSpec& spec, std::string_view input, std::string_view output) {
  json doc{{"kind", to_string(spec.kind)}, {"amount", spec.amount}, {"seed", spec.seed},
           {"input", input}, {"output", output}};
  return doc.dump(2) + "\n";
}

}  // namespace fuzzycorner

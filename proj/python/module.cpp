#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fuzzycorner/degradations.hpp"
#include "fuzzycorner/evaluation.hpp"
#include "fuzzycorner/fuzzy_detector.hpp"
#include "fuzzycorner/harris.hpp"
#include "fuzzycorner/synthetic.hpp"
#include "fuzzycorner/templates.hpp"

namespace py = pybind11;
using namespace fuzzycorner;

namespace {

using U8Array = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;
using CornerTuple = std::tuple<int, int, double>;

GrayImage to_image(const U8Array& arr) {
  if (arr.ndim() != 2) throw std::invalid_argument("expected a 2-D uint8 array");
  const auto h = static_cast<int>(arr.shape(0));
  const auto w = static_cast<int>(arr.shape(1));
  return GrayImage(w, h, std::vector<std::uint8_t>(arr.data(), arr.data() + arr.size()));
}

py::array_t<std::uint8_t> to_array(const GrayImage& img) {
  py::array_t<std::uint8_t> out({img.height(), img.width()});
  std::copy(img.pixels().begin(), img.pixels().end(), out.mutable_data());
  return out;
}

py::array_t<double> to_array(const ScoreMap& map) {
  py::array_t<double> out({map.height, map.width});
  std::copy(map.values.begin(), map.values.end(), out.mutable_data());
  return out;
}

ScoreMap to_scores(const py::array_t<double, py::array::c_style | py::array::forcecast>& arr) {
  if (arr.ndim() != 2) throw std::invalid_argument("expected a 2-D float array");
  ScoreMap map(static_cast<int>(arr.shape(1)), static_cast<int>(arr.shape(0)));
  std::copy(arr.data(), arr.data() + arr.size(), map.values.begin());
  return map;
}

std::vector<CornerTuple> to_tuples(const CornerSet& corners) {
  std::vector<CornerTuple> out;
  for (const auto& c : corners) out.emplace_back(c.x, c.y, c.score);
  return out;
}

CornerSet to_corners(const std::vector<CornerTuple>& tuples) {
  CornerSet out;
  for (const auto& [x, y, s] : tuples) out.push_back({x, y, s});
  return out;
}

RuleBase rules_from(const std::optional<std::string>& text) {
  if (!text) return RuleBase(default_templates());
  std::istringstream in(*text);
  return RuleBase(load_templates(in));
}

DetectorParams fuzzy_params(int t_h, double t_c, int h) {
  DetectorParams p{t_h, t_c, h};
  p.validate();
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fuzzy rule-based corner detector with a Harris baseline";

  py::register_exception<TemplateError>(m, "TemplateError", PyExc_ValueError);
  py::register_exception<PgmError>(m, "PgmError", PyExc_ValueError);

  m.def("read_pgm", [](py::bytes data) {
    std::istringstream in(std::string(data), std::ios::binary);
    return to_array(read_pgm(in));
  }, py::arg("data"));
  m.def("write_pgm", [](const U8Array& img, bool binary) {
    return py::bytes(write_pgm(to_image(img), binary ? PgmFormat::Binary : PgmFormat::Ascii));
  }, py::arg("image"), py::arg("binary") = true);

  m.def("default_template_text", [] { return std::string(default_template_text()); });

  m.def("cornerness_map", [](const U8Array& img, int t_h, std::optional<std::string> templates, int jobs) {
    DetectorParams p;
    p.t_h = t_h;
    const RuleBase rules = rules_from(templates);
    const GrayImage image = to_image(img);
    ScoreMap map;
    {
      py::gil_scoped_release release;
      map = cornerness_map(image, p, rules, jobs);
    }
    return to_array(map);
  }, py::arg("image"), py::arg("t_h") = 20, py::arg("templates") = py::none(), py::arg("jobs") = 1);

  m.def("select_corners", [](const py::array_t<double, py::array::c_style | py::array::forcecast>& map,
                             double t_c, int h) {
    DetectorParams p{20, t_c, h};
    p.validate();
    return to_tuples(select_corners(to_scores(map), p));
  }, py::arg("map"), py::arg("t_c") = 0.7, py::arg("h") = 10);

  m.def("detect_fuzzy", [](const U8Array& img, int t_h, double t_c, int h, std::optional<std::string> templates,
                           int jobs) {
    const DetectorParams p = fuzzy_params(t_h, t_c, h);
    const RuleBase rules = rules_from(templates);
    return to_tuples(detect_fuzzy(to_image(img), p, rules, jobs));
  }, py::arg("image"), py::arg("t_h") = 20, py::arg("t_c") = 0.7, py::arg("h") = 10,
     py::arg("templates") = py::none(), py::arg("jobs") = 1);

  m.def("harris_response", [](const U8Array& img, double k, int window, double sigma) {
    HarrisParams p;
    p.k = k;
    p.window = window;
    p.sigma = sigma;
    return to_array(harris_response(to_image(img), p));
  }, py::arg("image"), py::arg("k") = 0.06, py::arg("window") = 7, py::arg("sigma") = 2.0);

  m.def("harris_detect", [](const U8Array& img, double k, int window, double sigma, double response_frac, int h) {
    HarrisParams p{k, window, sigma, response_frac, h};
    return to_tuples(harris_detect(to_image(img), p));
  }, py::arg("image"), py::arg("k") = 0.06, py::arg("window") = 7, py::arg("sigma") = 2.0,
     py::arg("response_frac") = 0.01, py::arg("h") = 10);

  m.def("brighten", [](const U8Array& img, int c) { return to_array(brighten(to_image(img), c)); },
        py::arg("image"), py::arg("amount") = 80);
  m.def("darken", [](const U8Array& img, int c) { return to_array(darken(to_image(img), c)); },
        py::arg("image"), py::arg("amount") = 40);
  m.def("blur", [](const U8Array& img, int k) { return to_array(blur(to_image(img), k)); },
        py::arg("image"), py::arg("kernel") = 5);
  m.def("impulse_noise", [](const U8Array& img, double density, std::uint64_t seed) {
    return to_array(impulse_noise(to_image(img), density, seed));
  }, py::arg("image"), py::arg("density") = 0.10, py::arg("seed") = 0);

  m.def("match_corners", [](const std::vector<CornerTuple>& a, const std::vector<CornerTuple>& b, double d) {
    return match_corners(to_corners(a), to_corners(b), d).pairs;
  }, py::arg("a"), py::arg("b"), py::arg("match_dist") = 3.0);
  m.def("stability", [](const std::vector<CornerTuple>& a, const std::vector<CornerTuple>& b, double d) {
    return stability(to_corners(a), to_corners(b), d);
  }, py::arg("a1"), py::arg("a2"), py::arg("match_dist") = 3.0);
  m.def("noise_immunity", [](const std::vector<CornerTuple>& a, const std::vector<CornerTuple>& b, double d) {
    return noise_immunity(to_corners(a), to_corners(b), d);
  }, py::arg("b1"), py::arg("b2"), py::arg("match_dist") = 3.0);

  m.def("standard_rectangle", [] { return to_array(standard_rectangle().image); });
  m.def("make_corpus", [](int count, int size, std::uint64_t seed) {
    std::vector<std::pair<std::string, py::array_t<std::uint8_t>>> out;
    for (const auto& s : make_corpus(count, size, seed)) out.emplace_back(s.name, to_array(s.image));
    return out;
  }, py::arg("count") = 10, py::arg("size") = 64, py::arg("seed") = 0);
}

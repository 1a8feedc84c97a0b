#include <algorithm>
#include <bit>
#include <random>

#include "doctest.h"
#include "fuzzycorner/fuzzy_detector.hpp"
#include "fuzzycorner/synthetic.hpp"
#include "fuzzycorner/templates.hpp"
#include "oracle.hpp"

using namespace fuzzycorner;

namespace {

GrayImage from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::uint8_t> px;
  int w = 0;
  for (const auto& r : rows) {
    w = static_cast<int>(r.size());
    for (int v : r) px.push_back(static_cast<std::uint8_t>(v));
  }
  return GrayImage(w, static_cast<int>(rows.size()), std::move(px));
}

// A side (Rule 1: top-right quadrant) at 100 including center, B side at 200.
GrayImage rule1_step() {
  return from_rows({{200, 100, 100}, {200, 100, 100}, {200, 200, 200}});
}

GrayImage impulse_3x3() {
  return from_rows({{100, 100, 100}, {100, 255, 100}, {100, 100, 100}});
}

const CornerTemplate& rule1() {
  static const auto rules = default_templates();
  return rules.front();
}

oracle::Grid to_grid(CellMask m) {
  oracle::Grid g{};
  for (int i = 0; i < 9; ++i) g[i / 3][i % 3] = (m >> i) & 1;
  return g;
}

}  // namespace

TEST_CASE("difference_window: homogeneous, impulse and step") {
  const auto flat = difference_window(GrayImage(3, 3, 100), 1, 1);
  CHECK(std::all_of(flat.e.begin(), flat.e.end(), [](int v) { return v == 0; }));

  const auto imp = difference_window(impulse_3x3(), 1, 1);
  for (int i = 0; i < 9; ++i) CHECK(imp.e[i] == (i == 4 ? 0 : 155));

  const auto step = difference_window(rule1_step(), 1, 1);
  for (int r = 1; r <= 3; ++r) {
    for (int c = 1; c <= 3; ++c) {
      const bool in_a = (rule1().region_a() & cell_bit(r, c)) != 0;
      CHECK(step.diff(r, c) == (in_a ? 0 : -100));
    }
  }
}

TEST_CASE("difference_window rejects pixels without a full neighborhood") {
  const GrayImage img(5, 4, 10);
  CHECK_THROWS_WITH_AS(difference_window(img, 0, 2), "window out of bounds", std::out_of_range);
  CHECK_THROWS_AS(difference_window(img, 3, 2), std::out_of_range);
  CHECK_THROWS_AS(difference_window(img, 1, 4), std::out_of_range);
  CHECK_NOTHROW(difference_window(img, 2, 3));
}

TEST_CASE("binarize follows the sign split and the two threshold splits") {
  SUBCASE("all zeros takes the upper split") {
    const auto w = binarize(difference_window(GrayImage(3, 3, 100), 1, 1), 20);
    CHECK(w.rule == BinarizeRule::UpperSplit);
    CHECK(w.ep == kAllCells);
    CHECK(w.en == 0);
  }
  SUBCASE("bright impulse takes the upper split") {
    const auto w = binarize(difference_window(impulse_3x3(), 1, 1), 20);
    CHECK(w.rule == BinarizeRule::UpperSplit);
    CHECK(w.ep == kCenterCell);
    CHECK(w.en == kOffCenterCells);
  }
  SUBCASE("dark impulse takes the lower split") {
    const auto w = binarize(difference_window(from_rows({{90, 90, 90}, {90, 0, 90}, {90, 90, 90}}), 1, 1), 20);
    CHECK(w.rule == BinarizeRule::LowerSplit);
    CHECK(w.ep == kCenterCell);
    CHECK(w.en == kOffCenterCells);
  }
  SUBCASE("small dark dip stays inside -t_h") {
    const auto w = binarize(difference_window(from_rows({{90, 90, 90}, {90, 80, 90}, {90, 90, 90}}), 1, 1), 20);
    CHECK(w.rule == BinarizeRule::LowerSplit);
    CHECK(w.ep == kAllCells);
  }
  SUBCASE("rule 1 step stays on the sign split") {
    const auto w = binarize(difference_window(rule1_step(), 1, 1), 20);
    CHECK(w.rule == BinarizeRule::SignSplit);
    CHECK(w.ep == rule1().region_a());
    CHECK(w.en == rule1().region_b());
  }
}

TEST_CASE("binarize invariants hold for random windows") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    DifferenceWindow w;
    for (int i = 0; i < 9; ++i) w.e[i] = i == 4 ? 0 : static_cast<int>(rng() % 511) - 255;
    const auto b = binarize(w, static_cast<int>(rng() % 40));
    CHECK((b.ep & b.en) == 0);
    CHECK((b.ep | b.en) == kAllCells);
    CHECK((b.ep & kCenterCell) != 0);
  }
}

TEST_CASE("rule_membership on the reference windows") {
  const auto step = binarize(difference_window(rule1_step(), 1, 1), 20);
  CHECK(rule_membership(step, rule1()) == 1.0);

  const auto flat = binarize(difference_window(GrayImage(3, 3, 100), 1, 1), 20);
  for (const auto& t : default_templates()) CHECK(rule_membership(flat, t) == 0.0);

  const auto imp = binarize(difference_window(impulse_3x3(), 1, 1), 20);
  CHECK(rule_membership(imp, rule1()) == 0.25);
}

TEST_CASE("cornerness is the max over the rule set") {
  const auto rules = default_templates();
  CHECK(cornerness(binarize(difference_window(GrayImage(3, 3, 100), 1, 1), 20), rules) == 0.0);
  CHECK(cornerness(binarize(difference_window(rule1_step(), 1, 1), 20), rules) == 1.0);
  CHECK(cornerness(binarize(difference_window(impulse_3x3(), 1, 1), 20), rules) == 0.25);

  // oracle brute force over all 12 default partitions gives the same 0.25
  const auto imp = binarize(difference_window(impulse_3x3(), 1, 1), 20);
  double best = 0.0;
  for (const auto& p : oracle::default_partitions()) {
    best = std::max(best, oracle::membership(to_grid(imp.ep), to_grid(imp.en), p));
  }
  CHECK(best == 0.25);

  std::vector<CornerTemplate> eleven(rules.begin(), rules.end() - 1);
  CHECK_THROWS_AS(cornerness(imp, eleven), TemplateError);
  CHECK_THROWS_AS(RuleBase{eleven}, TemplateError);
}

TEST_CASE("rule_membership matches the brute-force evaluator on random windows") {
  const auto rules = default_templates();
  const auto& partitions = oracle::default_partitions();
  REQUIRE(rules.size() == partitions.size());
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    DifferenceWindow w;
    oracle::Grid e{};
    for (int i = 0; i < 9; ++i) {
      // bias toward small magnitudes so all three splits get exercised
      const int v = (rng() % 2) ? static_cast<int>(rng() % 61) - 30 : static_cast<int>(rng() % 511) - 255;
      w.e[i] = i == 4 ? 0 : v;
      e[i / 3][i % 3] = w.e[i];
    }
    const int t_h = 20;
    const auto prod = binarize(w, t_h);
    const auto ref = oracle::binarize(e, t_h);
    CHECK(to_grid(prod.ep) == ref.ep);
    CHECK(to_grid(prod.en) == ref.en);
    for (std::size_t k = 0; k < rules.size(); ++k) {
      CHECK(rule_membership(prod, rules[k]) == oracle::membership(ref.ep, ref.en, partitions[k]));
    }
  }
}

TEST_CASE("rule_membership is symmetric in A and B") {
  std::mt19937 rng(5);
  const auto rules = default_templates();
  for (int trial = 0; trial < 500; ++trial) {
    DifferenceWindow w;
    w.ep = static_cast<CellMask>(rng() & kAllCells);
    w.en = static_cast<CellMask>(rng() & kAllCells & ~w.ep);
    for (const auto& t : rules) {
      const int ab = std::popcount(static_cast<unsigned>(w.ep & t.region_a())) *
                     std::popcount(static_cast<unsigned>(w.en & t.region_b()));
      const int ba = std::popcount(static_cast<unsigned>(w.ep & t.region_b())) *
                     std::popcount(static_cast<unsigned>(w.en & t.region_a()));
      CHECK(membership_numerator(w, t) == std::max(ab, ba));
      CHECK(membership_numerator(w, t) <= 20);
    }
  }
}

TEST_CASE("cornerness_map on synthetic images") {
  const RuleBase rules(default_templates());
  const DetectorParams params;

  SUBCASE("constant image is all zero") {
    const auto map = cornerness_map(GrayImage(10, 10, 77), params, rules);
    CHECK(std::all_of(map.values.begin(), map.values.end(), [](double v) { return v == 0.0; }));
  }

  SUBCASE("rectangle corners reach 1.0") {
    const Scene rect = standard_rectangle();
    const auto map = cornerness_map(rect.image, params, rules);
    CHECK(map.at(17, 17) == 1.0);
    CHECK(map.at(46, 17) == 1.0);
    CHECK(map.at(17, 46) == 1.0);
    CHECK(map.at(46, 46) == 1.0);
    // straight edges score 15/20 through the wedge rules
    CHECK(map.at(30, 17) == 0.75);
    CHECK(map.at(30, 16) == 0.75);
    CHECK(map.at(30, 30) == 0.0);
  }

  SUBCASE("matches the brute-force evaluator pixel by pixel") {
    std::mt19937 rng(11);
    GrayImage img(24, 20);
    for (auto& p : img.pixels()) p = static_cast<std::uint8_t>(100 + static_cast<int>(rng() % 60));
    const auto map = cornerness_map(img, params, rules);
    auto pixel = [&img](int r, int c) { return static_cast<int>(img.at(c, r)); };
    for (int y = 1; y < img.height() - 1; ++y) {
      for (int x = 1; x < img.width() - 1; ++x) CHECK(map.at(x, y) == oracle::cornerness_at(pixel, y, x, 20));
    }
  }

  SUBCASE("border stays zero") {
    const Scene rect = rectangle_scene(12, 12, 0, 0, 6, 6, 10, 200);
    const auto map = cornerness_map(rect.image, params, rules);
    for (int x = 0; x < 12; ++x) {
      CHECK(map.at(x, 0) == 0.0);
      CHECK(map.at(x, 11) == 0.0);
      CHECK(map.at(0, x) == 0.0);
      CHECK(map.at(11, x) == 0.0);
    }
  }

  SUBCASE("too small") {
    CHECK_THROWS_AS(cornerness_map(GrayImage(2, 5), params, rules), std::invalid_argument);
  }
}

TEST_CASE("cornerness_map is invariant to unclamped intensity shifts") {
  const RuleBase rules(default_templates());
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    GrayImage img(32, 32);
    for (auto& p : img.pixels()) p = static_cast<std::uint8_t>(rng() % 216);
    GrayImage shifted = img;
    for (auto& p : shifted.pixels()) p = static_cast<std::uint8_t>(p + 40);
    CHECK(cornerness_map(img, {}, rules).values == cornerness_map(shifted, {}, rules).values);
  }
}

TEST_CASE("a single impulse never scores above 0.25") {
  const RuleBase rules(default_templates());
  std::mt19937 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto base = static_cast<std::uint8_t>(rng() % 256);
    GrayImage img(9, 9, base);
    img.at(static_cast<int>(rng() % 9), static_cast<int>(rng() % 9)) = static_cast<std::uint8_t>(rng() % 256);
    const auto map = cornerness_map(img, {}, rules);
    CHECK(*std::max_element(map.values.begin(), map.values.end()) <= 0.25);
    CHECK(select_corners(map, {}).empty());
  }
}

TEST_CASE("row-parallel evaluation is bit-identical") {
  const RuleBase rules(default_templates());
  std::mt19937 rng(21);
  GrayImage img(97, 61);
  for (auto& p : img.pixels()) p = static_cast<std::uint8_t>(rng());
  const auto serial = cornerness_map(img, {}, rules, 1);
  for (int jobs : {2, 3, 8, 64}) {
    const auto par = cornerness_map(img, {}, rules, jobs);
    CHECK(par.values == serial.values);
    CHECK(select_corners(par, {}) == select_corners(serial, {}));
  }
}

TEST_CASE("detect_fuzzy equals select_corners over cornerness_map") {
  const RuleBase rules(default_templates());
  std::mt19937 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    GrayImage img(3 + static_cast<int>(rng() % 40), 3 + static_cast<int>(rng() % 40));
    const int levels = 2 + static_cast<int>(rng() % 6);
    for (auto& p : img.pixels()) p = static_cast<std::uint8_t>((rng() % levels) * (255 / (levels - 1)));
    DetectorParams params;
    params.t_h = static_cast<int>(rng() % 60);
    params.t_c = static_cast<double>(1 + rng() % 100) / 100.0;
    params.h = 1 + static_cast<int>(rng() % 12);
    const int jobs = 1 + static_cast<int>(rng() % 4);
    CHECK(detect_fuzzy(img, params, rules, jobs) == select_corners(cornerness_map(img, params, rules), params));
  }
}

TEST_CASE("DetectorParams validation") {
  CHECK(DetectorParams{}.validate().empty());
  CHECK(DetectorParams{40, 0.7, 10}.validate().size() == 1);
  CHECK(DetectorParams{5, 0.7, 10}.validate().size() == 1);
  CHECK_THROWS_WITH_AS(DetectorParams({20, 1.5, 10}).validate(), "t_c out of range (0, 1]", std::invalid_argument);
  CHECK_THROWS_AS(DetectorParams({20, 0.0, 10}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(DetectorParams({20, 0.7, 0}).validate(), std::invalid_argument);
  CHECK(DetectorParams{}.radius() == 5);
}

TEST_CASE("cornerness_to_image scales by 255") {
  CornernessMap map(2, 1);
  map.at(0, 0) = 0.75;
  map.at(1, 0) = 1.0;
  const auto img = cornerness_to_image(map);
  CHECK(img.at(0, 0) == 191);
  CHECK(img.at(1, 0) == 255);
}

#include <algorithm>
#include <random>

#include "doctest.h"
#include "fuzzycorner/degradations.hpp"

using namespace fuzzycorner;

namespace {

GrayImage random_image(int w, int h, unsigned seed, int lo = 0, int hi = 255) {
  std::mt19937 rng(seed);
  GrayImage img(w, h);
  for (auto& p : img.pixels()) p = static_cast<std::uint8_t>(lo + static_cast<int>(rng() % (hi - lo + 1)));
  return img;
}

std::size_t differing(const GrayImage& a, const GrayImage& b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.pixels().size(); ++i) n += a.pixels()[i] != b.pixels()[i];
  return n;
}

}  // namespace

TEST_CASE("brighten and darken clamp") {
  GrayImage img(3, 1, std::vector<std::uint8_t>{100, 200, 20});
  const auto up = brighten(img, 80);
  CHECK(up.at(0, 0) == 180);
  CHECK(up.at(1, 0) == 255);
  const auto down = darken(img, 40);
  CHECK(down.at(0, 0) == 60);
  CHECK(down.at(2, 0) == 0);
  CHECK(brighten(img, 0) == img);
  CHECK(darken(img, 0) == img);
  CHECK_THROWS_AS(brighten(img, -1), std::invalid_argument);
}

TEST_CASE("brighten then darken is the identity below the clamp") {
  for (int c : {0, 13, 40, 80}) {
    const auto img = random_image(20, 20, static_cast<unsigned>(c), 0, 255 - c);
    CHECK(darken(brighten(img, c), c) == img);
  }
}

TEST_CASE("box blur") {
  CHECK(blur(GrayImage(9, 9, 42), 5) == GrayImage(9, 9, 42));

  GrayImage impulse(11, 11, 0);
  impulse.at(5, 5) = 255;
  const auto b = blur(impulse, 5);
  int tens = 0;
  for (int y = 0; y < 11; ++y) {
    for (int x = 0; x < 11; ++x) {
      const bool inside = std::abs(x - 5) <= 2 && std::abs(y - 5) <= 2;
      CHECK(b.at(x, y) == (inside ? 10 : 0));
      tens += b.at(x, y) == 10;
    }
  }
  CHECK(tens == 25);

  // step edge becomes a linear ramp across 5 pixels: k*250/5 for k = 1..4
  GrayImage step(16, 8, 0);
  for (int y = 0; y < 8; ++y) {
    for (int x = 8; x < 16; ++x) step.at(x, y) = 250;
  }
  const auto s = blur(step, 5);
  const int expected[] = {0, 50, 100, 150, 200, 250};
  for (int i = 0; i < 6; ++i) CHECK(s.at(5 + i, 4) == expected[i]);

  CHECK_THROWS_AS(blur(impulse, 4), std::invalid_argument);
  CHECK_THROWS_AS(blur(GrayImage(4, 4), 5), std::invalid_argument);
}

TEST_CASE("blur roughly preserves the mean") {
  const auto img = random_image(60, 60, 17);
  const auto b = blur(img, 5);
  double m0 = 0, m1 = 0;
  for (auto p : img.pixels()) m0 += p;
  for (auto p : b.pixels()) m1 += p;
  m0 /= 3600.0;
  m1 /= 3600.0;
  CHECK(std::abs(m0 - m1) <= 0.5);
}

TEST_CASE("impulse noise counts and values") {
  const GrayImage img(100, 100, 128);
  CHECK(impulse_noise(img, 0.0, 1) == img);

  const auto full = impulse_noise(img, 1.0, 1);
  CHECK(std::all_of(full.pixels().begin(), full.pixels().end(), [](auto p) { return p == 0 || p == 255; }));

  const auto tenth = impulse_noise(img, 0.10, 42);
  CHECK(differing(img, tenth) == 1000);
  const auto salt = std::count(tenth.pixels().begin(), tenth.pixels().end(), 255);
  CHECK(salt > 400);
  CHECK(salt < 600);

  CHECK(impulse_noise(img, 0.10, 42) == tenth);
  CHECK_FALSE(impulse_noise(img, 0.10, 43) == tenth);
  CHECK_THROWS_AS(impulse_noise(img, 1.5, 0), std::invalid_argument);
}

TEST_CASE("DegradeSpec") {
  CHECK(DegradeSpec::defaults(DegradeKind::Brighten).amount == 80);
  CHECK(DegradeSpec::defaults(DegradeKind::Darken).amount == 40);
  CHECK(DegradeSpec::defaults(DegradeKind::Blur).amount == 5);
  CHECK(DegradeSpec::defaults(DegradeKind::Impulse).amount == 0.10);

  CHECK_THROWS_WITH_AS((DegradeSpec{DegradeKind::Blur, 4, 0}).validate(), "kernel must be odd",
                       std::invalid_argument);
  CHECK_THROWS_AS((DegradeSpec{DegradeKind::Impulse, -0.1, 0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((DegradeSpec{DegradeKind::Brighten, -3, 0}).validate(), std::invalid_argument);

  CHECK(parse_degrade_kind("impulse") == DegradeKind::Impulse);
  CHECK_FALSE(parse_degrade_kind("gamma").has_value());

  const GrayImage img(10, 10, 100);
  CHECK((DegradeSpec{DegradeKind::Brighten, 80, 0}).apply(img) == GrayImage(10, 10, 180));
}

#include "fuzzycorner/fuzzy_detector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "nms_grid.hpp"
#include "parallel.hpp"

namespace fuzzycorner {

bool is_four_connected(CellMask cells) {
  cells &= kAllCells;
  if (cells == 0) return false;
  CellMask seen = static_cast<CellMask>(cells & -cells);
  for (;;) {
    CellMask grown = seen;
    for (int bit = 0; bit < 9; ++bit) {
      if (!(seen & (1u << bit))) continue;
      const int r = bit / 3;
      const int c = bit % 3;
      if (r > 0) grown |= static_cast<CellMask>(1u << (bit - 3));
      if (r < 2) grown |= static_cast<CellMask>(1u << (bit + 3));
      if (c > 0) grown |= static_cast<CellMask>(1u << (bit - 1));
      if (c < 2) grown |= static_cast<CellMask>(1u << (bit + 1));
    }
    grown &= cells;
    if (grown == seen) break;
    seen = grown;
  }
  return seen == cells;
}

CornerTemplate CornerTemplate::from_region_a(int id, CellMask region_a) {
  if (region_a & ~kAllCells) {
    throw TemplateError("rule " + std::to_string(id) + ": invalid cell");
  }
  if (!(region_a & kCenterCell)) {
    throw TemplateError("rule " + std::to_string(id) + ": region A missing center cell (2,2)");
  }
  const int size = std::popcount(static_cast<unsigned>(region_a));
  if (size != 4 && size != 5) {
    throw TemplateError("rule " + std::to_string(id) + ": region A has " + std::to_string(size) +
                        " cells, expected 4 or 5");
  }
  const auto region_b = static_cast<CellMask>(kAllCells & ~region_a);
  if (!is_four_connected(region_a) || !is_four_connected(region_b)) {
    throw TemplateError("rule " + std::to_string(id) + ": disconnected region");
  }
  return CornerTemplate(id, region_a);
}

std::vector<std::string> DetectorParams::validate() const {
  if (!(t_c > 0.0 && t_c <= 1.0)) {
    throw std::invalid_argument("t_c out of range (0, 1]");
  }
  if (h < 1) {
    throw std::invalid_argument("H must be at least 1");
  }
  std::vector<std::string> warnings;
  if (t_h <= 5 || t_h >= 35) {
    warnings.push_back("t_h = " + std::to_string(t_h) + " lies outside the typical range (5, 35)");
  }
  return warnings;
}

DifferenceWindow difference_window(const GrayImage& image, int row, int col) {
  if (row < 1 || col < 1 || row > image.height() - 2 || col > image.width() - 2) {
    throw std::out_of_range("window out of bounds");
  }
  DifferenceWindow w;
  const int center = image.at(col, row);
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) {
      w.e[(dr + 1) * 3 + (dc + 1)] = center - image.at(col + dc, row + dr);
    }
  }
  return w;
}

DifferenceWindow binarize(DifferenceWindow w, int t_h) {
  CellMask negative = 0;
  for (int i = 0; i < 9; ++i) {
    if (w.e[i] < 0) negative |= static_cast<CellMask>(1u << i);
  }
  auto split = [&w](auto is_positive) {
    w.ep = 0;
    for (int i = 0; i < 9; ++i) {
      if (is_positive(w.e[i])) w.ep |= static_cast<CellMask>(1u << i);
    }
    w.en = static_cast<CellMask>(kAllCells & ~w.ep);
  };

  if (negative == 0) {
    split([t_h](int e) { return e <= t_h; });
    w.rule = BinarizeRule::UpperSplit;
  } else if ((negative & kOffCenterCells) == kOffCenterCells) {
    split([t_h](int e) { return e >= -t_h; });
    w.rule = BinarizeRule::LowerSplit;
  } else {
    w.en = negative;
    w.ep = static_cast<CellMask>(kAllCells & ~negative);
    w.rule = BinarizeRule::SignSplit;
  }
  return w;
}

namespace {

int count(CellMask m) { return std::popcount(static_cast<unsigned>(m)); }

int numerator(CellMask ep, CellMask en, CellMask a, CellMask b) {
  return std::max(count(ep & a) * count(en & b), count(ep & b) * count(en & a));
}

}  // namespace

int membership_numerator(const DifferenceWindow& w, const CornerTemplate& rule) {
  return numerator(w.ep, w.en, rule.region_a(), rule.region_b());
}

double rule_membership(const DifferenceWindow& w, const CornerTemplate& rule) {
  return membership_numerator(w, rule) / static_cast<double>(kMembershipNormalizer);
}

double cornerness(const DifferenceWindow& w, std::span<const CornerTemplate> rules) {
  if (rules.size() != kRuleCount) {
    throw TemplateError("expected 12 rules, got " + std::to_string(rules.size()));
  }
  int best = 0;
  for (const auto& rule : rules) best = std::max(best, membership_numerator(w, rule));
  return best / static_cast<double>(kMembershipNormalizer);
}

RuleBase::RuleBase(std::vector<CornerTemplate> rules) : rules_(std::move(rules)) {
  if (rules_.size() != kRuleCount) {
    throw TemplateError("expected 12 rules, got " + std::to_string(rules_.size()));
  }
  for (unsigned ep = 0; ep < table_.size(); ++ep) {
    const auto en = static_cast<CellMask>(kAllCells & ~ep);
    int best = 0;
    for (const auto& rule : rules_) {
      best = std::max(best, numerator(static_cast<CellMask>(ep), en, rule.region_a(), rule.region_b()));
    }
    table_[ep] = static_cast<std::uint8_t>(best);
  }
}

namespace {

// Writes the cornerness numerator (0..20) of every interior pixel through out(x, y, n).
template <typename Out>
void numerator_rows(const GrayImage& image, int t_h, const RuleBase& rules, int jobs, Out out) {
  const int width = image.width();
  const auto px = image.pixels();
  detail::parallel_rows(1, image.height() - 1, jobs, [&](int row_begin, int row_end) {
    for (int y = row_begin; y < row_end; ++y) {
      const std::uint8_t* above = px.data() + static_cast<std::size_t>(y - 1) * width;
      const std::uint8_t* here = above + width;
      const std::uint8_t* below = here + width;
      for (int x = 1; x < width - 1; ++x) {
        const int c = here[x];
        const int e[9] = {c - above[x - 1], c - above[x], c - above[x + 1],
                          c - here[x - 1],  0,            c - here[x + 1],
                          c - below[x - 1], c - below[x], c - below[x + 1]};
        unsigned negative = 0;
        for (int i = 0; i < 9; ++i) negative |= static_cast<unsigned>(e[i] < 0) << i;

        unsigned ep;
        if (negative == 0) {
          ep = 0;
          for (int i = 0; i < 9; ++i) ep |= static_cast<unsigned>(e[i] <= t_h) << i;
        } else if ((negative & kOffCenterCells) == kOffCenterCells) {
          ep = 0;
          for (int i = 0; i < 9; ++i) ep |= static_cast<unsigned>(e[i] >= -t_h) << i;
        } else {
          ep = ~negative & kAllCells;
        }
        out(x, y, rules.numerator_for(static_cast<CellMask>(ep)));
      }
    }
  });
}

void require_window(const GrayImage& image) {
  if (image.width() < 3 || image.height() < 3) {
    throw std::invalid_argument("image must be at least 3x3");
  }
}

double to_membership(int numerator) { return numerator / static_cast<double>(kMembershipNormalizer); }

}  // namespace

CornernessMap cornerness_map(const GrayImage& image, const DetectorParams& params, const RuleBase& rules,
                             int jobs) {
  require_window(image);
  CornernessMap map(image.width(), image.height());
  numerator_rows(image, params.t_h, rules, jobs, [&](int x, int y, int n) { map.at(x, y) = to_membership(n); });
  return map;
}

CornerSet select_corners(const CornernessMap& map, const DetectorParams& params) {
  return suppress_non_maxima(map, params.t_c, params.radius());
}

CornerSet detect_fuzzy(const GrayImage& image, const DetectorParams& params, const RuleBase& rules, int jobs) {
  // Same result as select_corners(cornerness_map(...)), but suppression runs on the
  // one-byte numerators instead of a double map.
  require_window(image);
  const int width = image.width();
  std::vector<std::uint8_t> numerators(static_cast<std::size_t>(width) * image.height(), 0);
  numerator_rows(image, params.t_h, rules, jobs, [&](int x, int y, int n) {
    numerators[static_cast<std::size_t>(y) * width + x] = static_cast<std::uint8_t>(n);
  });
  int threshold = 0;
  while (threshold <= kMembershipNormalizer && to_membership(threshold) < params.t_c) ++threshold;
  return detail::suppress_grid(numerators.data(), width, image.height(), static_cast<std::uint8_t>(threshold),
                               params.radius(), [](std::uint8_t n) { return to_membership(n); });
}

GrayImage cornerness_to_image(const CornernessMap& map) {
  std::vector<std::uint8_t> px(map.values.size());
  std::transform(map.values.begin(), map.values.end(), px.begin(), [](double mu) {
    return static_cast<std::uint8_t>(std::clamp(std::lround(mu * 255.0), 0L, 255L));
  });
  return GrayImage(map.width, map.height, std::move(px));
}

}  // namespace fuzzycorner

#pragma once

// Fuzzy rule-based corner detector.
//
// Every interior pixel gets a 3x3 matrix of gray-level differences (center minus
// neighbor). The matrix is split into a non-negative mask (ep) and a negative mask
// (en), with the split point moved to +/-t_h when all differences share a sign. Each
// of the 12 corner templates partitions the window into regions A and B; a rule fires
// in proportion to (A positives * B negatives) or (B positives * A negatives),
// normalized by 20. Cornerness is the max over rules, and corners are the pixels with
// cornerness >= t_c that dominate their H x H neighborhood.

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzycorner/image.hpp"
#include "fuzzycorner/nms.hpp"

namespace fuzzycorner {

// One bit per 3x3 cell: bit (row - 1) * 3 + (col - 1), rows/cols 1-indexed.
using CellMask = std::uint16_t;

inline constexpr CellMask kAllCells = 0x1FF;
inline constexpr int kCenterBit = 4;
inline constexpr CellMask kCenterCell = CellMask{1} << kCenterBit;
inline constexpr CellMask kOffCenterCells = kAllCells & ~kCenterCell;
inline constexpr int kRuleCount = 12;
inline constexpr int kMembershipNormalizer = 20;

constexpr CellMask cell_bit(int row, int col) {
  return static_cast<CellMask>(CellMask{1} << ((row - 1) * 3 + (col - 1)));
}

enum class BinarizeRule {
  None,        // not binarized yet
  SignSplit,   // ep: e >= 0, en: e < 0
  UpperSplit,  // all e >= 0; ep: e <= t_h, en: e > t_h
  LowerSplit,  // all off-center e < 0; ep: e >= -t_h, en: e < -t_h
};

struct DifferenceWindow {
  std::array<int, 9> e{};  // row-major, e[4] == 0
  CellMask ep = 0;
  CellMask en = 0;
  BinarizeRule rule = BinarizeRule::None;

  int diff(int row, int col) const { return e[(row - 1) * 3 + (col - 1)]; }
  bool positive(int row, int col) const { return (ep & cell_bit(row, col)) != 0; }
  bool negative(int row, int col) const { return (en & cell_bit(row, col)) != 0; }
};

class TemplateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unordered partition of the 3x3 window into two 4-connected regions of 4 and 5
// cells. Region A is the side holding the center cell.
class CornerTemplate {
 public:
  // Throws TemplateError if the region violates the partition invariants.
  static CornerTemplate from_region_a(int id, CellMask region_a);

  int id() const { return id_; }
  CellMask region_a() const { return region_a_; }
  CellMask region_b() const { return static_cast<CellMask>(kAllCells & ~region_a_); }

  bool same_partition(const CornerTemplate& other) const { return region_a_ == other.region_a_; }

 private:
  CornerTemplate(int id, CellMask a) : id_(id), region_a_(a) {}

  int id_ = 0;
  CellMask region_a_ = 0;
};

bool is_four_connected(CellMask cells);

struct DetectorParams {
  int t_h = 20;
  double t_c = 0.7;
  int h = 10;

  int radius() const { return h / 2; }

  // Throws std::invalid_argument on hard violations (t_c outside (0,1], h < 1).
  // Returns advisory warnings, e.g. t_h outside the usual (5, 35) band.
  std::vector<std::string> validate() const;
};

using CornernessMap = ScoreMap;

DifferenceWindow difference_window(const GrayImage& image, int row, int col);
DifferenceWindow binarize(DifferenceWindow window, int t_h);

// Integer form of a rule's firing strength: max of the two cross products, in 0..20.
int membership_numerator(const DifferenceWindow& window, const CornerTemplate& rule);
double rule_membership(const DifferenceWindow& window, const CornerTemplate& rule);

// Max over the rule set; throws TemplateError unless exactly 12 rules are given.
double cornerness(const DifferenceWindow& window, std::span<const CornerTemplate> rules);

// A validated set of 12 rules with a precomputed response per binarized window.
// Because en is always the complement of ep after binarization, the 9-bit ep mask
// determines the cornerness completely.
class RuleBase {
 public:
  explicit RuleBase(std::vector<CornerTemplate> rules);

  const std::vector<CornerTemplate>& rules() const { return rules_; }
  int numerator_for(CellMask ep) const { return table_[ep & kAllCells]; }

 private:
  std::vector<CornerTemplate> rules_;
  std::array<std::uint8_t, 512> table_{};
};

// Interior pixels get their cornerness, the 1-pixel border stays 0.
// Rows are split across `jobs` workers; output is identical for any jobs value.
CornernessMap cornerness_map(const GrayImage& image, const DetectorParams& params, const RuleBase& rules,
                             int jobs = 1);

CornerSet select_corners(const CornernessMap& map, const DetectorParams& params);

CornerSet detect_fuzzy(const GrayImage& image, const DetectorParams& params, const RuleBase& rules,
                       int jobs = 1);

// mu scaled by 255 and rounded.
GrayImage cornerness_to_image(const CornernessMap& map);

}  // namespace fuzzycorner

#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzycorner/fuzzy_detector.hpp"
#include "fuzzycorner/harris.hpp"
#include "fuzzycorner/image.hpp"

namespace fuzzycorner {

struct MatchResult {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (index in a, index in b)
  std::vector<std::size_t> unmatched_a;
  std::vector<std::size_t> unmatched_b;
  double match_dist = 0.0;
};

// Greedy one-to-one matching: repeatedly pair the globally closest unmatched corners
// within match_dist. Ties go to the raster-earlier corner of a, then of b.
MatchResult match_corners(const CornerSet& a, const CornerSet& b, double match_dist);

// Percent of common corners over the smaller set. nullopt when both sets are empty;
// 0 when exactly one is.
std::optional<double> stability(const CornerSet& a1, const CornerSet& a2, double match_dist);

// Percent of common corners over the larger set, so invented corners count against
// the detector. nullopt when both sets are empty.
std::optional<double> noise_immunity(const CornerSet& b1, const CornerSet& b2, double match_dist);

enum class DetectorKind { Fuzzy, Harris };

std::string_view to_string(DetectorKind kind);
std::optional<DetectorKind> parse_detector_kind(std::string_view name);

struct DetectorConfig {
  DetectorKind kind = DetectorKind::Fuzzy;
  DetectorParams fuzzy;
  HarrisParams harris;
  std::shared_ptr<const RuleBase> rules;  // defaults to the built-in rule set when null

  static DetectorConfig make_fuzzy(DetectorParams params = {}, std::shared_ptr<const RuleBase> rules = nullptr);
  static DetectorConfig make_harris(HarrisParams params = {});

  std::string_view name() const { return to_string(kind); }
  CornerSet detect(const GrayImage& image, int jobs = 1) const;
};

std::shared_ptr<const RuleBase> default_rule_base();

enum class Protocol { Stability, Noise };

std::string_view to_string(Protocol protocol);
std::optional<Protocol> parse_protocol(std::string_view name);

struct BenchmarkInput {
  std::string name;
  std::optional<GrayImage> image;
  std::string error;  // set when the image could not be read
};

// All *.pgm / *.pnm files of a directory, sorted by file name. Unreadable files yield
// an input carrying the error. Throws if the directory cannot be listed.
std::vector<BenchmarkInput> load_benchmark_inputs(const std::filesystem::path& directory);

struct BenchmarkConfig {
  Protocol protocol = Protocol::Noise;
  std::vector<DetectorConfig> detectors;
  int shift = 40;           // stability: compare I + shift against I - shift
  double density = 0.10;    // noise: impulse density
  std::uint64_t seed = 0;   // noise: image i uses seed + i
  double match_dist = 3.0;
  int jobs = 1;             // images processed concurrently
};

struct MetricRecord {
  std::string image;
  std::string detector;
  std::string metric;           // "eta", "rho" or "error"
  std::optional<double> value;  // empty: no corners in either frame, or error
  std::size_t corners_a = 0;
  std::size_t corners_b = 0;
  std::size_t matched = 0;
  double seconds = 0.0;  // mean wall-clock time of one detection
  std::string error;
};

struct Aggregate {
  std::string detector;
  std::string metric;
  std::size_t count = 0;  // records with a value
  double mean = 0.0;
  double stddev = 0.0;  // population
  double min = 0.0;
  double max = 0.0;
  std::size_t corners_a = 0;
  std::size_t corners_b = 0;
  std::size_t matched = 0;
  double mean_seconds = 0.0;
  double stddev_seconds = 0.0;
};

struct MetricsReport {
  Protocol protocol = Protocol::Noise;
  double match_dist = 3.0;
  std::vector<MetricRecord> records;  // sorted by image, then detector order
  std::vector<Aggregate> aggregates;  // one per detector
};

MetricsReport run_benchmark(const std::vector<BenchmarkInput>& inputs, const BenchmarkConfig& config);

Aggregate aggregate_records(const std::vector<MetricRecord>& records, std::string_view detector,
                            std::string_view metric);

// CSV: image,detector,metric,value_percent,corners_a,corners_b,matched,seconds
// followed by one "aggregate" row per detector. With include_timing false the
// seconds column is left blank so output is byte-reproducible.
std::string to_csv(const MetricsReport& report, bool include_timing = true);
std::string to_json(const MetricsReport& report, bool include_timing = true);

}  // namespace fuzzycorner

#include "fuzzycorner/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <thread>
#include <tuple>

#include "fuzzycorner/degradations.hpp"
#include "fuzzycorner/templates.hpp"
#include "json.hpp"

namespace fuzzycorner {

MatchResult match_corners(const CornerSet& a, const CornerSet& b, double match_dist) {
  if (!(match_dist > 0.0)) throw std::invalid_argument("match_dist must be positive");

  struct Candidate {
    double dist2;
    int ay, ax, by, bx;
    std::size_t ia, ib;
    auto key() const { return std::tie(dist2, ay, ax, by, bx, ia, ib); }
  };
  std::vector<Candidate> candidates;
  const double limit2 = match_dist * match_dist;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double dx = a[i].x - b[j].x;
      const double dy = a[i].y - b[j].y;
      const double d2 = dx * dx + dy * dy;
      if (d2 <= limit2) candidates.push_back({d2, a[i].y, a[i].x, b[j].y, b[j].x, i, j});
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& l, const Candidate& r) { return l.key() < r.key(); });

  MatchResult result;
  result.match_dist = match_dist;
  std::vector<bool> used_a(a.size()), used_b(b.size());
  for (const auto& c : candidates) {
    if (used_a[c.ia] || used_b[c.ib]) continue;
    used_a[c.ia] = used_b[c.ib] = true;
    result.pairs.emplace_back(c.ia, c.ib);
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!used_a[i]) result.unmatched_a.push_back(i);
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (!used_b[j]) result.unmatched_b.push_back(j);
  }
  return result;
}

std::optional<double> stability(const CornerSet& a1, const CornerSet& a2, double match_dist) {
  if (a1.empty() && a2.empty()) return std::nullopt;
  const std::size_t denom = std::min(a1.size(), a2.size());
  if (denom == 0) return 0.0;
  return 100.0 * static_cast<double>(match_corners(a1, a2, match_dist).pairs.size()) / static_cast<double>(denom);
}

std::optional<double> noise_immunity(const CornerSet& b1, const CornerSet& b2, double match_dist) {
  if (b1.empty() && b2.empty()) return std::nullopt;
  const std::size_t denom = std::max(b1.size(), b2.size());
  return 100.0 * static_cast<double>(match_corners(b1, b2, match_dist).pairs.size()) / static_cast<double>(denom);
}

std::string_view to_string(DetectorKind kind) { return kind == DetectorKind::Fuzzy ? "fuzzy" : "harris"; }

std::optional<DetectorKind> parse_detector_kind(std::string_view name) {
  if (name == "fuzzy") return DetectorKind::Fuzzy;
  if (name == "harris") return DetectorKind::Harris;
  return std::nullopt;
}

std::shared_ptr<const RuleBase> default_rule_base() {
  static const auto rules = std::make_shared<const RuleBase>(default_templates());
  return rules;
}

DetectorConfig DetectorConfig::make_fuzzy(DetectorParams params, std::shared_ptr<const RuleBase> rules) {
  DetectorConfig c;
  c.kind = DetectorKind::Fuzzy;
  c.fuzzy = params;
  c.rules = rules ? std::move(rules) : default_rule_base();
  return c;
}

DetectorConfig DetectorConfig::make_harris(HarrisParams params) {
  DetectorConfig c;
  c.kind = DetectorKind::Harris;
  c.harris = params;
  c.fuzzy.h = params.h;
  return c;
}

CornerSet DetectorConfig::detect(const GrayImage& image, int jobs) const {
  if (kind == DetectorKind::Harris) return harris_detect(image, harris, jobs);
  return detect_fuzzy(image, fuzzy, rules ? *rules : *default_rule_base(), jobs);
}

std::string_view to_string(Protocol protocol) { return protocol == Protocol::Stability ? "stability" : "noise"; }

std::optional<Protocol> parse_protocol(std::string_view name) {
  if (name == "stability") return Protocol::Stability;
  if (name == "noise") return Protocol::Noise;
  return std::nullopt;
}

std::vector<BenchmarkInput> load_benchmark_inputs(const std::filesystem::path& directory) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(directory)) {
    const auto ext = entry.path().extension().string();
    if (entry.is_regular_file() && (ext == ".pgm" || ext == ".pnm")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<BenchmarkInput> inputs;
  for (const auto& path : files) {
    BenchmarkInput in{path.filename().string(), std::nullopt, {}};
    try {
      in.image = read_pgm_file(path);
    } catch (const std::exception& e) {
      in.error = e.what();
    }
    inputs.push_back(std::move(in));
  }
  return inputs;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Timed {
  CornerSet corners;
  double seconds;
};

Timed timed_detect(const DetectorConfig& detector, const GrayImage& image) {
  const auto start = Clock::now();
  CornerSet corners = detector.detect(image, 1);
  const std::chrono::duration<double> elapsed = Clock::now() - start;
  return {std::move(corners), elapsed.count()};
}

MetricRecord evaluate_one(const BenchmarkInput& input, std::size_t index, const DetectorConfig& detector,
                          const BenchmarkConfig& config) {
  MetricRecord r;
  r.image = input.name;
  r.detector = std::string(detector.name());
  r.metric = config.protocol == Protocol::Stability ? "eta" : "rho";
  if (!input.image) {
    r.metric = "error";
    r.error = input.error;
    return r;
  }
  try {
    GrayImage first, second;
    if (config.protocol == Protocol::Stability) {
      first = brighten(*input.image, config.shift);
      second = darken(*input.image, config.shift);
    } else {
      first = *input.image;
      second = impulse_noise(*input.image, config.density, config.seed + index);
    }
    const Timed a = timed_detect(detector, first);
    const Timed b = timed_detect(detector, second);
    r.corners_a = a.corners.size();
    r.corners_b = b.corners.size();
    r.matched = match_corners(a.corners, b.corners, config.match_dist).pairs.size();
    r.value = config.protocol == Protocol::Stability ? stability(a.corners, b.corners, config.match_dist)
                                                     : noise_immunity(a.corners, b.corners, config.match_dist);
    r.seconds = (a.seconds + b.seconds) / 2.0;
  } catch (const std::exception& e) {
    r.metric = "error";
    r.value.reset();
    r.error = e.what();
  }
  return r;
}

}  // namespace

Aggregate aggregate_records(const std::vector<MetricRecord>& records, std::string_view detector,
                            std::string_view metric) {
  Aggregate agg;
  agg.detector = std::string(detector);
  agg.metric = std::string(metric);
  std::vector<double> values, times;
  for (const auto& r : records) {
    if (r.detector != detector || r.metric != metric || !r.value) continue;
    values.push_back(*r.value);
    times.push_back(r.seconds);
    agg.corners_a += r.corners_a;
    agg.corners_b += r.corners_b;
    agg.matched += r.matched;
  }
  agg.count = values.size();
  if (values.empty()) return agg;

  auto mean_std = [](const std::vector<double>& v) {
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double var = 0.0;
    for (double x : v) var += (x - mean) * (x - mean);
    return std::pair{mean, std::sqrt(var / static_cast<double>(v.size()))};
  };
  std::tie(agg.mean, agg.stddev) = mean_std(values);
  std::tie(agg.mean_seconds, agg.stddev_seconds) = mean_std(times);
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  agg.min = *lo;
  agg.max = *hi;
  // clamp accumulated rounding so the mean always lies within [min, max]
  agg.mean = std::clamp(agg.mean, agg.min, agg.max);
  return agg;
}

MetricsReport run_benchmark(const std::vector<BenchmarkInput>& inputs, const BenchmarkConfig& config) {
  if (!(config.match_dist > 0.0)) throw std::invalid_argument("match_dist must be positive");
  if (config.detectors.empty()) throw std::invalid_argument("no detector configured");

  std::vector<std::size_t> order(inputs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return inputs[l].name < inputs[r].name; });

  const std::size_t n_det = config.detectors.size();
  std::vector<MetricRecord> records(order.size() * n_det);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t task; (task = next.fetch_add(1)) < records.size();) {
      const std::size_t pos = task / n_det;
      const std::size_t idx = order[pos];
      records[task] = evaluate_one(inputs[idx], pos, config.detectors[task % n_det], config);
    }
  };
  const int jobs = std::clamp(config.jobs, 1, static_cast<int>(std::max<std::size_t>(records.size(), 1)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  MetricsReport report;
  report.protocol = config.protocol;
  report.match_dist = config.match_dist;
  report.records = std::move(records);
  const std::string metric = config.protocol == Protocol::Stability ? "eta" : "rho";
  for (const auto& d : config.detectors) {
    report.aggregates.push_back(aggregate_records(report.records, d.name(), metric));
  }
  return report;
}

namespace {

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

}  // namespace

std::string to_csv(const MetricsReport& report, bool include_timing) {
  std::string out = "image,detector,metric,value_percent,corners_a,corners_b,matched,seconds\n";
  auto seconds = [&](double s) { return include_timing ? fmt("%.6f", s) : std::string(); };
  for (const auto& r : report.records) {
    if (r.metric == "error") {
      out += r.image + "," + r.detector + ",error,,,,,\n";
      continue;
    }
    out += r.image + "," + r.detector + "," + r.metric + "," + (r.value ? fmt("%.4f", *r.value) : "") + "," +
           std::to_string(r.corners_a) + "," + std::to_string(r.corners_b) + "," + std::to_string(r.matched) +
           "," + seconds(r.seconds) + "\n";
  }
  for (const auto& a : report.aggregates) {
    const bool has = a.count > 0;
    out += "aggregate," + a.detector + "," + a.metric + "," + (has ? fmt("%.4f", a.mean) : "") + "," +
           std::to_string(a.corners_a) + "," + std::to_string(a.corners_b) + "," + std::to_string(a.matched) +
           "," + (has ? seconds(a.mean_seconds) : "") + "\n";
  }
  return out;
}

std::string to_json(const MetricsReport& report, bool include_timing) {
  using nlohmann::json;
  json doc;
  doc["protocol"] = to_string(report.protocol);
  doc["match_dist"] = report.match_dist;
  json records = json::array();
  for (const auto& r : report.records) {
    json j{{"image", r.image}, {"detector", r.detector}, {"metric", r.metric}};
    j["value_percent"] = r.value ? json(*r.value) : json(nullptr);
    j["corners_a"] = r.corners_a;
    j["corners_b"] = r.corners_b;
    j["matched"] = r.matched;
    if (include_timing) j["seconds"] = r.seconds;
    if (!r.error.empty()) j["error"] = r.error;
    if (r.metric != "error" && !r.value) j["note"] = "no corners";
    records.push_back(std::move(j));
  }
  doc["records"] = std::move(records);
  json aggs = json::array();
  for (const auto& a : report.aggregates) {
    json j{{"detector", a.detector}, {"metric", a.metric}, {"count", a.count}};
    if (a.count > 0) {
      j["mean"] = a.mean;
      j["std"] = a.stddev;
      j["min"] = a.min;
      j["max"] = a.max;
      if (include_timing) {
        j["mean_seconds"] = a.mean_seconds;
        j["std_seconds"] = a.stddev_seconds;
      }
    }
    j["corners_a"] = a.corners_a;
    j["corners_b"] = a.corners_b;
    j["matched"] = a.matched;
    aggs.push_back(std::move(j));
  }
  doc["aggregates"] = std::move(aggs);
  return doc.dump(2) + "\n";
}

}  // namespace fuzzycorner

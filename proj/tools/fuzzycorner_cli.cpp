// fuzzycorner: detect, degrade, eval, compare, synth.
//
// Exit codes: 0 success, 1 I/O or data error, 2 argument/validation error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "fuzzycorner/degradations.hpp"
#include "fuzzycorner/documents.hpp"
#include "fuzzycorner/evaluation.hpp"
#include "fuzzycorner/synthetic.hpp"
#include "fuzzycorner/templates.hpp"

namespace fs = std::filesystem;
using namespace fuzzycorner;

namespace {

constexpr int kOk = 0;
constexpr int kDataError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string out;
  std::string overlay;
  std::string map;
  std::string json_out;
  std::string detector = "fuzzy";
  std::string templates;
  std::string kind;
  std::string protocol = "noise";
  DetectorParams fuzzy;
  HarrisParams harris;
  double amount = -1.0;
  int shift = 40;
  double density = 0.10;
  double match_dist = 3.0;
  std::uint64_t seed = 0;
  int jobs = 1;
  int count = 10;
  int size = 64;
  bool no_timing = false;
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw DataError("cannot write " + path);
}

GrayImage read_input(const std::string& path) {
  try {
    return read_pgm_file(path);
  } catch (const std::exception& e) {
    throw DataError(path + ": " + e.what());
  }
}

std::shared_ptr<const RuleBase> load_rules(const Options& o) {
  if (o.templates.empty()) return default_rule_base();
  try {
    return std::make_shared<const RuleBase>(load_templates_file(o.templates));
  } catch (const TemplateError& e) {
    throw UsageError(o.templates + ": " + e.what());
  } catch (const std::exception& e) {
    throw DataError(e.what());
  }
}

DetectorConfig make_detector(const Options& o, DetectorKind kind) {
  try {
    if (kind == DetectorKind::Harris) {
      HarrisParams p = o.harris;
      p.h = o.fuzzy.h;
      p.validate();
      return DetectorConfig::make_harris(p);
    }
    for (const auto& w : o.fuzzy.validate()) std::cerr << "warning: " << w << "\n";
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return DetectorConfig::make_fuzzy(o.fuzzy, load_rules(o));
}

DetectorKind detector_kind(const Options& o) {
  auto k = parse_detector_kind(o.detector);
  if (!k) throw UsageError("unknown detector '" + o.detector + "'");
  return *k;
}

int cmd_detect(const Options& o) {
  const DetectorConfig detector = make_detector(o, detector_kind(o));
  const GrayImage image = read_input(o.input);
  CornerSet corners;
  try {
    if (detector.kind == DetectorKind::Fuzzy) {
      const auto map = cornerness_map(image, detector.fuzzy, *detector.rules, o.jobs);
      corners = select_corners(map, detector.fuzzy);
      if (!o.map.empty()) write_pgm_file(o.map, cornerness_to_image(map));
    } else {
      corners = harris_detect(image, detector.harris, o.jobs);
      if (!o.map.empty()) throw UsageError("--map is only available for the fuzzy detector");
    }
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const UsageError*>(&e)) throw;
    throw DataError(e.what());
  }
  if (!o.overlay.empty()) {
    try {
      write_pgm_file(o.overlay, draw_overlay(image, corners));
    } catch (const std::exception& e) {
      throw DataError(e.what());
    }
  }
  write_text(o.out, corner_document(fs::path(o.input).filename().string(), image, detector, corners));
  return kOk;
}

int cmd_degrade(const Options& o) {
  const auto kind = parse_degrade_kind(o.kind);
  if (!kind) throw UsageError("unknown degradation '" + o.kind + "'");
  DegradeSpec spec = DegradeSpec::defaults(*kind);
  if (o.amount >= 0.0) spec.amount = o.amount;
  spec.seed = o.seed;
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const GrayImage image = read_input(o.input);
  GrayImage degraded;
  try {
    degraded = spec.apply(image);
    write_pgm_file(o.out, degraded);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::exception& e) {
    throw DataError(e.what());
  }
  write_text(o.out + ".json", degrade_sidecar(spec, o.input, o.out));
  return kOk;
}

int run_eval(const Options& o, std::vector<DetectorConfig> detectors) {
  const auto protocol = parse_protocol(o.protocol);
  if (!protocol) throw UsageError("unknown protocol '" + o.protocol + "'");
  if (!(o.match_dist > 0.0)) throw UsageError("match-dist must be positive");
  if (o.shift < 0) throw UsageError("shift must be >= 0");
  if (!(o.density >= 0.0 && o.density <= 1.0)) throw UsageError("density must lie in [0, 1]");

  std::vector<BenchmarkInput> inputs;
  try {
    inputs = load_benchmark_inputs(o.input);
  } catch (const std::exception& e) {
    throw DataError(o.input + ": " + e.what());
  }
  if (inputs.empty()) throw DataError(o.input + ": no PGM images found");

  BenchmarkConfig config;
  config.protocol = *protocol;
  config.detectors = std::move(detectors);
  config.shift = o.shift;
  config.density = o.density;
  config.seed = o.seed;
  config.match_dist = o.match_dist;
  config.jobs = o.jobs;
  const MetricsReport report = run_benchmark(inputs, config);

  for (const auto& r : report.records) {
    if (!r.error.empty()) std::cerr << "error: " << r.image << ": " << r.error << "\n";
  }
  for (const auto& a : report.aggregates) {
    if (a.count == 0) {
      std::cerr << a.detector << " " << a.metric << ": no scored images\n";
      continue;
    }
    char line[160];
    std::snprintf(line, sizeof line, "%s %s: %.2f +/- %.2f %% over %zu images\n", a.detector.c_str(),
                  a.metric.c_str(), a.mean, a.stddev, a.count);
    std::cerr << line;
  }
  write_text(o.out, to_csv(report, !o.no_timing));
  if (!o.json_out.empty()) write_text(o.json_out, to_json(report, !o.no_timing));
  return kOk;
}

int cmd_eval(const Options& o) { return run_eval(o, {make_detector(o, detector_kind(o))}); }

int cmd_compare(const Options& o) {
  return run_eval(o, {make_detector(o, DetectorKind::Fuzzy), make_detector(o, DetectorKind::Harris)});
}

int cmd_synth(const Options& o) {
  if (o.count < 1 || o.size < 16) throw UsageError("count must be >= 1 and size >= 16");
  std::error_code ec;
  fs::create_directories(o.out, ec);
  if (ec) throw DataError("cannot create " + o.out + ": " + ec.message());
  for (const auto& scene : make_corpus(o.count, o.size, o.seed)) {
    try {
      write_pgm_file(fs::path(o.out) / (scene.name + ".pgm"), scene.image);
    } catch (const std::exception& e) {
      throw DataError(e.what());
    }
  }
  return kOk;
}

void add_detector_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--th", o.fuzzy.t_h, "Difference threshold t_h (gray levels)");
  cmd->add_option("--tc", o.fuzzy.t_c, "Cornerness threshold t_c in (0, 1]");
  cmd->add_option("--H", o.fuzzy.h, "Selection window size H");
  cmd->add_option("--templates", o.templates, "Rule template file (default: built-in set)");
  cmd->add_option("--k", o.harris.k, "Harris k");
  cmd->add_option("--sigma", o.harris.sigma, "Harris Gaussian window sigma");
  cmd->add_option("--window", o.harris.window, "Harris Gaussian window size");
  cmd->add_option("--response-frac", o.harris.response_frac, "Harris threshold as a fraction of max response");
  cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

void add_eval_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("input", o.input, "Directory of PGM images")->required();
  cmd->add_option("--protocol", o.protocol, "stability | noise");
  cmd->add_option("--shift", o.shift, "Stability: compare I+shift against I-shift");
  cmd->add_option("--density", o.density, "Noise: impulse density");
  cmd->add_option("--seed", o.seed, "Random seed");
  cmd->add_option("--match-dist", o.match_dist, "Corner correspondence radius (px)");
  cmd->add_option("--out", o.out, "CSV output (default stdout)");
  cmd->add_option("--json", o.json_out, "Also write the report as JSON");
  cmd->add_flag("--no-timing", o.no_timing, "Leave the seconds column blank (byte-reproducible output)");
  add_detector_flags(cmd, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fuzzy rule-based corner detection toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* detect = app.add_subcommand("detect", "Detect corners in a PGM image");
  detect->add_option("input", o.input, "Input PGM")->required();
  detect->add_option("--detector", o.detector, "fuzzy | harris");
  detect->add_option("--out", o.out, "Corner document (default stdout)");
  detect->add_option("--overlay", o.overlay, "Write input with corner marks");
  detect->add_option("--map", o.map, "Write cornerness map as PGM (fuzzy only)");
  add_detector_flags(detect, o);

  auto* degrade = app.add_subcommand("degrade", "Apply a brightness, blur or impulse-noise degradation");
  degrade->add_option("input", o.input, "Input PGM")->required();
  degrade->add_option("--kind", o.kind, "brighten | darken | blur | impulse")->required();
  degrade->add_option("--amount", o.amount, "Gray levels, kernel size or noise density");
  degrade->add_option("--seed", o.seed, "Random seed (impulse)");
  degrade->add_option("--out", o.out, "Output PGM; parameter sidecar goes to <out>.json")->required();

  auto* eval = app.add_subcommand("eval", "Benchmark one detector over a directory");
  eval->add_option("--detector", o.detector, "fuzzy | harris");
  add_eval_flags(eval, o);

  auto* compare = app.add_subcommand("compare", "Benchmark fuzzy and Harris side by side");
  add_eval_flags(compare, o);

  auto* synth = app.add_subcommand("synth", "Write a synthetic scene corpus");
  synth->add_option("--out", o.out, "Output directory")->required();
  synth->add_option("--count", o.count, "Number of scenes");
  synth->add_option("--size", o.size, "Scene width and height");
  synth->add_option("--seed", o.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*detect) return cmd_detect(o);
    if (*degrade) return cmd_degrade(o);
    if (*eval) return cmd_eval(o);
    if (*compare) return cmd_compare(o);
    if (*synth) return cmd_synth(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  }
  return kUsageError;
}

#include "fuzzycorner/templates.hpp"

#include <fstream>
#include <istream>
#include <regex>
#include <sstream>
#include <string>

namespace fuzzycorner {

namespace {

CellMask parse_rule_line(const std::string& line, int line_no, int rule_id) {
  static const std::regex cell_re(R"(^([0-9]+),([0-9]+)$)");
  std::istringstream tokens(line);
  std::string token;
  CellMask cells = 0;
  while (tokens >> token) {
    std::smatch m;
    if (!std::regex_match(token, m, cell_re)) {
      throw TemplateError("line " + std::to_string(line_no) + ": invalid cell '" + token + "'");
    }
    const int row = std::stoi(m[1]);
    const int col = std::stoi(m[2]);
    if (row < 1 || row > 3 || col < 1 || col > 3) {
      throw TemplateError("line " + std::to_string(line_no) + ": invalid cell '" + token +
                          "' (row and col must be 1..3)");
    }
    const CellMask bit = cell_bit(row, col);
    if (cells & bit) {
      throw TemplateError("line " + std::to_string(line_no) + ": cell '" + token + "' listed twice");
    }
    cells |= bit;
  }
  try {
    return CornerTemplate::from_region_a(rule_id, cells).region_a();
  } catch (const TemplateError& e) {
    throw TemplateError("line " + std::to_string(line_no) + ": " + e.what());
  }
}

}  // namespace

std::vector<CornerTemplate> load_templates(std::istream& in) {
  std::vector<CornerTemplate> rules;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    const int id = static_cast<int>(rules.size()) + 1;
    auto rule = CornerTemplate::from_region_a(id, parse_rule_line(line, line_no, id));
    for (const auto& earlier : rules) {
      if (earlier.same_partition(rule)) {
        throw TemplateError("line " + std::to_string(line_no) + ": duplicate template (same partition as rule " +
                            std::to_string(earlier.id()) + ")");
      }
    }
    rules.push_back(rule);
  }
  if (rules.size() != kRuleCount) {
    throw TemplateError("expected 12 rules, found " + std::to_string(rules.size()));
  }
  return rules;
}

std::vector<CornerTemplate> load_templates_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open template file " + path.string());
  }
  return load_templates(in);
}

std::vector<CornerTemplate> default_templates() {
  std::istringstream in{std::string(default_template_text())};
  return load_templates(in);
}

}  // namespace fuzzycorner

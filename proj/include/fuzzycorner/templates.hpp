#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "fuzzycorner/fuzzy_detector.hpp"

namespace fuzzycorner {

// Template file format: one rule per line, listing the cells of region A (the side
// containing the center) as 1-indexed "row,col" pairs separated by whitespace.
// Region B is the complement. '#' starts a comment; blank lines are ignored.
//
//   # rule 1: top-right quadrant
//   1,2 1,3 2,2 2,3
//
// Exactly 12 rules are required.
std::vector<CornerTemplate> load_templates(std::istream& in);
std::vector<CornerTemplate> load_templates_file(const std::filesystem::path& path);

// Text of the built-in rule set (same content as data/default_templates.txt).
std::string_view default_template_text();
std::vector<CornerTemplate> default_templates();

}  // namespace fuzzycorner

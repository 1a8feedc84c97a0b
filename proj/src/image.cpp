#include "fuzzycorner/image.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace fuzzycorner {

GrayImage::GrayImage(int width, int height, std::uint8_t fill)
    : GrayImage(width, height,
                std::vector<std::uint8_t>(
                    static_cast<std::size_t>(std::max(width, 0)) * static_cast<std::size_t>(std::max(height, 0)),
                    fill)) {}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("image dimensions must be at least 1x1");
  }
  if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw std::invalid_argument("pixel count does not match width x height");
  }
}

namespace {

void skip_space_and_comments(std::istream& in) {
  for (;;) {
    int c = in.peek();
    if (c == '#') {
      in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
    } else if (c != EOF && std::isspace(c)) {
      in.get();
    } else {
      return;
    }
  }
}

long read_header_int(std::istream& in, const std::string& field) {
  skip_space_and_comments(in);
  std::string token;
  while (in.peek() != EOF && !std::isspace(in.peek()) && in.peek() != '#') {
    token.push_back(static_cast<char>(in.get()));
  }
  if (token.empty()) {
    throw PgmError(field, "missing " + field + " in PGM header");
  }
  long value = 0;
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw PgmError(field, "non-numeric " + field + " in PGM header: '" + token + "'");
    }
    value = value * 10 + (c - '0');
    if (value > std::numeric_limits<int>::max()) {
      throw PgmError(field, field + " too large in PGM header");
    }
  }
  return value;
}

}  // namespace

GrayImage read_pgm(std::istream& in) {
  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (in.gcount() != 2 || magic[0] != 'P' || (magic[1] != '2' && magic[1] != '5')) {
    throw PgmError("magic", "malformed magic: expected P2 or P5");
  }
  const bool binary = magic[1] == '5';

  const long width = read_header_int(in, "width");
  const long height = read_header_int(in, "height");
  const long maxval = read_header_int(in, "maxval");
  if (width < 1) throw PgmError("width", "width must be positive");
  if (height < 1) throw PgmError("height", "height must be positive");
  if (maxval > 255) throw PgmError("maxval", "maxval exceeds 8-bit range");
  if (maxval < 1) throw PgmError("maxval", "maxval must be positive");

  const auto count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<std::uint8_t> pixels(count);

  if (binary) {
    // exactly one whitespace byte separates maxval from the raster
    int sep = in.get();
    if (sep == EOF || !std::isspace(sep)) {
      throw PgmError("maxval", "missing whitespace after maxval");
    }
    in.read(reinterpret_cast<char*>(pixels.data()), static_cast<std::streamsize>(count));
    if (static_cast<std::size_t>(in.gcount()) != count) {
      throw PgmError("payload", "truncated payload: expected " + std::to_string(count) + " bytes, got " +
                                    std::to_string(in.gcount()));
    }
    for (auto p : pixels) {
      if (p > maxval) throw PgmError("payload", "pixel value exceeds maxval");
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      skip_space_and_comments(in);
      if (in.peek() == EOF) {
        throw PgmError("payload", "truncated payload: expected " + std::to_string(count) + " values, got " +
                                      std::to_string(i));
      }
      long v = read_header_int(in, "payload");
      if (v > maxval) throw PgmError("payload", "pixel value exceeds maxval");
      pixels[i] = static_cast<std::uint8_t>(v);
    }
  }
  return GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

GrayImage read_pgm_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  return read_pgm(in);
}

void write_pgm(std::ostream& out, const GrayImage& image, PgmFormat format) {
  out << (format == PgmFormat::Binary ? "P5" : "P2") << '\n'
      << image.width() << ' ' << image.height() << '\n'
      << 255 << '\n';
  const auto px = image.pixels();
  if (format == PgmFormat::Binary) {
    out.write(reinterpret_cast<const char*>(px.data()), static_cast<std::streamsize>(px.size()));
    return;
  }
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      if (x > 0) out << ' ';
      out << static_cast<int>(image.at(x, y));
    }
    out << '\n';
  }
}

std::string write_pgm(const GrayImage& image, PgmFormat format) {
  std::ostringstream out(std::ios::binary);
  write_pgm(out, image, format);
  return std::move(out).str();
}

void write_pgm_file(const std::filesystem::path& path, const GrayImage& image, PgmFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  write_pgm(out, image, format);
  if (!out) {
    throw std::runtime_error("write failed for " + path.string());
  }
}

GrayImage to_gray(std::span<const std::uint8_t> rgb, int width, int height) {
  if (width < 1 || height < 1 ||
      rgb.size() != 3 * static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw std::invalid_argument("RGB buffer length does not match width x height triplets");
  }
  std::vector<std::uint8_t> gray(rgb.size() / 3);
  for (std::size_t i = 0; i < gray.size(); ++i) {
    const double luma = 0.299 * rgb[3 * i] + 0.587 * rgb[3 * i + 1] + 0.114 * rgb[3 * i + 2];
    gray[i] = static_cast<std::uint8_t>(std::clamp(std::lround(luma), 0L, 255L));
  }
  return GrayImage(width, height, std::move(gray));
}

}  // namespace fuzzycorner

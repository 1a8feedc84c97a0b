#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuzzycorner {

// 8-bit grayscale image, row-major.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(int width, int height, std::uint8_t fill = 0);
  GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  bool empty() const { return pixels_.empty(); }

  std::uint8_t at(int x, int y) const { return pixels_[index(x, y)]; }
  std::uint8_t& at(int x, int y) { return pixels_[index(x, y)]; }

  std::span<const std::uint8_t> pixels() const { return pixels_; }
  std::span<std::uint8_t> pixels() { return pixels_; }

  bool operator==(const GrayImage&) const = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

enum class PgmFormat { Ascii, Binary };

// Raised by read_pgm. field() names the header token (or "payload") at fault.
class PgmError : public std::runtime_error {
 public:
  PgmError(std::string field, const std::string& what)
      : std::runtime_error(what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

GrayImage read_pgm(std::istream& in);
GrayImage read_pgm_file(const std::filesystem::path& path);

void write_pgm(std::ostream& out, const GrayImage& image, PgmFormat format = PgmFormat::Binary);
std::string write_pgm(const GrayImage& image, PgmFormat format = PgmFormat::Binary);
void write_pgm_file(const std::filesystem::path& path, const GrayImage& image,
                    PgmFormat format = PgmFormat::Binary);

/// BT.601 luma of interleaved RGB triplets, rounded to nearest.
GrayImage to_gray(std::span<const std::uint8_t> rgb, int width, int height);

}  // namespace fuzzycorner

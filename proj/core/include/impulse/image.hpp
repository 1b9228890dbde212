#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

namespace impulse {

/// 8-bit grayscale image, row-major, top-left origin.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  std::uint8_t at(int row, int col) const {
    return pixels[static_cast<std::size_t>(row) * width + col];
  }
  std::uint8_t& at(int row, int col) {
    return pixels[static_cast<std::size_t>(row) * width + col];
  }
  std::size_t size() const { return pixels.size(); }

  bool operator==(const Image&) const = default;
};

/// Checked construction. Throws std::invalid_argument when the pixel count
/// does not equal width*height, std::out_of_range when a value falls
/// outside [0,255].
Image make_image(int width, int height, std::span<const int> values);

Image make_filled(int width, int height, std::uint8_t value);

/// Malformed or unsupported PGM data.
struct PgmError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses a binary PGM (magic "P5", maxval exactly 255). '#' comments are
/// allowed between header tokens; the raster starts immediately after the
/// single whitespace byte that follows the maxval token.
Image read_pgm(std::span<const std::uint8_t> bytes);

/// Serializes as "P5\n{width} {height}\n255\n" followed by the raw raster.
std::vector<std::uint8_t> write_pgm(const Image& image);

Image load_pgm(const std::filesystem::path& path);
void save_pgm(const std::filesystem::path& path, const Image& image);

}  // namespace impulse

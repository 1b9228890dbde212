#include "impulse/metrics.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace impulse {

double mse(const Image& reference, const Image& candidate) {
  if (reference.width != candidate.width || reference.height != candidate.height) {
    throw std::invalid_argument("image dimensions do not match");
  }
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < reference.pixels.size(); ++i) {
    const int d = static_cast<int>(reference.pixels[i]) -
                  static_cast<int>(candidate.pixels[i]);
    sum += static_cast<std::uint64_t>(d * d);
  }
  return static_cast<double>(sum) / static_cast<double>(reference.pixels.size());
}

QualityScore psnr(const Image& reference, const Image& candidate) {
  const double m = mse(reference, candidate);
  if (m == 0.0) {
    return {0.0, std::numeric_limits<double>::infinity()};
  }
  return {m, 10.0 * std::log10(255.0 * 255.0 / m)};
}

}  // namespace impulse

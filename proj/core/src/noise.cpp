#include "impulse/noise.hpp"

#include <algorithm>
#include <stdexcept>

namespace impulse {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
}

std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
  return mix64(mix64(seed + kGamma) + (index + 1) * kGamma);
}

double uniform01(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::size_t FlagMap::count() const {
  return static_cast<std::size_t>(
      std::count(flags.begin(), flags.end(), std::uint8_t{1}));
}

FlagMap make_flags(int width, int height) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("flag map dimensions must be positive");
  }
  FlagMap map;
  map.width = width;
  map.height = height;
  map.flags.assign(static_cast<std::size_t>(width) * height, 0);
  return map;
}

NoisyImage inject_impulse(const Image& image, const NoiseSpec& spec) {
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
    throw std::invalid_argument("noise density must be in [0,1]");
  }
  NoisyImage out{image, make_flags(image.width, image.height)};
  const double pepper = spec.pepper_prob();
  const double corrupt = pepper + spec.salt_prob();
  for (std::size_t i = 0; i < out.image.pixels.size(); ++i) {
    const double u = uniform01(derive_stream(spec.seed, i));
    if (u < pepper) {
      out.image.pixels[i] = 0;
      out.flags.flags[i] = 1;
    } else if (u < corrupt) {
      out.image.pixels[i] = 255;
      out.flags.flags[i] = 1;
    }
  }
  return out;
}

}  // namespace impulse

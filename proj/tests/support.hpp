#pragma once

#include <random>

#include "impulse/image.hpp"

namespace testutil {

inline impulse::Image random_image(std::mt19937_64& rng, int width, int height,
                                   int lo = 0, int hi = 255) {
  std::uniform_int_distribution<int> dist(lo, hi);
  impulse::Image img;
  img.width = width;
  img.height = height;
  img.pixels.resize(static_cast<std::size_t>(width) * height);
  for (auto& p : img.pixels) {
    p = static_cast<std::uint8_t>(dist(rng));
  }
  return img;
}

// Horizontal ramp: pixel (r, c) = base + c. Every interior pixel sits
// strictly inside its 3x3 window range, and edge-column pixels equal their
// window median, so decision filters pass it through untouched.
inline impulse::Image ramp_image(int width, int height, int base = 50) {
  impulse::Image img;
  img.width = width;
  img.height = height;
  img.pixels.resize(static_cast<std::size_t>(width) * height);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      img.at(r, c) = static_cast<std::uint8_t>(base + c);
    }
  }
  return img;
}

}  // namespace testutil

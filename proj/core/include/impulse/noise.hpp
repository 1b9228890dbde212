#pragma once

#include <cstdint>
#include <vector>

#include "impulse/image.hpp"

namespace impulse {

/// Salt-and-pepper corruption parameters. Salt and pepper each take half
/// of the total density.
struct NoiseSpec {
  double density = 0.0;  // fraction of pixels corrupted, in [0,1]
  std::uint64_t seed = 0;

  double pepper_prob() const { return 0.5 * density; }
  double salt_prob() const { return 0.5 * density; }
};

/// Per-pixel corrupted/clean markers, row-major like Image.
struct FlagMap {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> flags;  // 0 = clean, 1 = flagged

  bool at(int row, int col) const {
    return flags[static_cast<std::size_t>(row) * width + col] != 0;
  }
  void set(int row, int col, bool value) {
    flags[static_cast<std::size_t>(row) * width + col] = value ? 1 : 0;
  }
  std::size_t count() const;

  bool operator==(const FlagMap&) const = default;
};

FlagMap make_flags(int width, int height);

struct NoisyImage {
  Image image;
  FlagMap flags;
};

/// splitmix64 finalizer; every seeded draw in this library goes through it.
std::uint64_t mix64(std::uint64_t x);

/// Stateless stream value for `index` under `seed`: equal to consuming the
/// splitmix64 sequence whose state starts at mix64(seed + gamma), advanced
/// index+1 times. Independent of call order, identical on every platform.
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index);

/// 53-bit uniform in [0,1).
double uniform01(std::uint64_t bits);

/// Corrupts each pixel independently: one uniform draw u per pixel,
/// u < density/2 -> pepper (0), u < density -> salt (255), else the pixel
/// is kept. The flag map marks exactly the corrupted pixels. Output is a
/// pure function of (dimensions, seed, density).
NoisyImage inject_impulse(const Image& image, const NoiseSpec& spec);

}  // namespace impulse

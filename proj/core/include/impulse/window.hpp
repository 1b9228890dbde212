#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "impulse/image.hpp"

namespace impulse {

/// Odd square neighborhood, side >= 3.
struct WindowSpec {
  int size = 3;
};

/// Throws std::invalid_argument unless size is odd and >= 3.
WindowSpec make_window(int size);

struct WindowStats {
  std::uint8_t min = 0;
  std::uint8_t max = 0;
  std::uint8_t median = 0;
};

/// size*size neighborhood of (row, col) in row-major window order.
/// Out-of-bounds coordinates clamp to the nearest edge pixel (replicate
/// padding); a center outside the image throws std::out_of_range.
std::vector<std::uint8_t> extract_window(const Image& image, int row, int col,
                                         WindowSpec spec);

/// Allocation-free variant for filter kernels; clears and refills `out`.
void extract_window_into(const Image& image, int row, int col, int size,
                         std::vector<std::uint8_t>& out);

/// Middle element of the sorted sequence; the lower of the two middle
/// elements for even counts. Empty input throws std::invalid_argument.
std::uint8_t median_of(std::span<const std::uint8_t> values);

WindowStats window_stats(std::span<const std::uint8_t> values);

/// Median of the multiset formed by `neighbors` plus `center` repeated
/// `weight` times. The weight must be odd and positive.
std::uint8_t weighted_median(std::span<const std::uint8_t> neighbors,
                             std::uint8_t center, int weight);

// In-place variants; they reorder `values`.
std::uint8_t median_in_place(std::span<std::uint8_t> values);
WindowStats window_stats_in_place(std::span<std::uint8_t> values);

}  // namespace impulse

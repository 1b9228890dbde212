#include "impulse/window.hpp"

#include <algorithm>
#include <stdexcept>

namespace impulse {

WindowSpec make_window(int size) {
  if (size < 3 || size % 2 == 0) {
    throw std::invalid_argument("window size must be odd and >= 3, got " +
                                std::to_string(size));
  }
  return WindowSpec{size};
}

void extract_window_into(const Image& image, int row, int col, int size,
                         std::vector<std::uint8_t>& out) {
  if (size < 3 || size % 2 == 0) {
    throw std::invalid_argument("window size must be odd and >= 3, got " +
                                std::to_string(size));
  }
  if (row < 0 || row >= image.height || col < 0 || col >= image.width) {
    throw std::out_of_range("window center (" + std::to_string(row) + "," +
                            std::to_string(col) + ") outside image");
  }
  out.clear();
  const int k = size / 2;
  for (int dr = -k; dr <= k; ++dr) {
    const int r = std::clamp(row + dr, 0, image.height - 1);
    for (int dc = -k; dc <= k; ++dc) {
      const int c = std::clamp(col + dc, 0, image.width - 1);
      out.push_back(image.at(r, c));
    }
  }
}

std::vector<std::uint8_t> extract_window(const Image& image, int row, int col,
                                         WindowSpec spec) {
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(spec.size) * spec.size);
  extract_window_into(image, row, col, spec.size, out);
  return out;
}

std::uint8_t median_in_place(std::span<std::uint8_t> values) {
  if (values.empty()) {
    throw std::invalid_argument("median of empty sequence");
  }
  const auto mid = values.begin() + (values.size() - 1) / 2;
  std::nth_element(values.begin(), mid, values.end());
  return *mid;
}

std::uint8_t median_of(std::span<const std::uint8_t> values) {
  std::vector<std::uint8_t> scratch(values.begin(), values.end());
  return median_in_place(scratch);
}

WindowStats window_stats_in_place(std::span<std::uint8_t> values) {
  if (values.empty()) {
    throw std::invalid_argument("window stats of empty sequence");
  }
  const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  WindowStats stats{*mn, *mx, 0};
  stats.median = median_in_place(values);
  return stats;
}

WindowStats window_stats(std::span<const std::uint8_t> values) {
  std::vector<std::uint8_t> scratch(values.begin(), values.end());
  return window_stats_in_place(scratch);
}

std::uint8_t weighted_median(std::span<const std::uint8_t> neighbors,
                             std::uint8_t center, int weight) {
  if (weight < 1 || weight % 2 == 0) {
    throw std::invalid_argument("center weight must be odd and positive, got " +
                                std::to_string(weight));
  }
  std::vector<std::uint8_t> scratch;
  scratch.reserve(neighbors.size() + static_cast<std::size_t>(weight));
  scratch.assign(neighbors.begin(), neighbors.end());
  scratch.insert(scratch.end(), static_cast<std::size_t>(weight), center);
  return median_in_place(scratch);
}

}  // namespace impulse

#include "impulse/filters_decision.hpp"

#include <stdexcept>
#include <vector>

namespace impulse {

namespace {

void validate(const AdaptiveConfig& config) {
  make_window(config.start_window.size);
  if (config.max_window % 2 == 0 || config.max_window < config.start_window.size) {
    throw std::invalid_argument("max window must be odd and >= start window size");
  }
}

bool median_clean(const WindowStats& stats) {
  // The median counts as clean under either test: strictly inside the
  // window range, or strictly inside the intensity range.
  return (stats.min < stats.median && stats.median < stats.max) ||
         (stats.median > 0 && stats.median < 255);
}

std::uint8_t left_fallback(const Image& image, int row, int col,
                           std::uint8_t median) {
  if (col > 0) return image.at(row, col - 1);
  if (row > 0) return image.at(row - 1, col);
  return median;
}

}  // namespace

Image filter_amf(const Image& image, const AdaptiveConfig& config) {
  validate(config);
  Image out = image;
  std::vector<std::uint8_t> buf;
  for (int r = 0; r < image.height; ++r) {
    for (int c = 0; c < image.width; ++c) {
      int w = config.start_window.size;
      for (;;) {
        extract_window_into(image, r, c, w, buf);
        const WindowStats stats = window_stats_in_place(buf);
        if (stats.min < stats.median && stats.median < stats.max) {
          const std::uint8_t v = image.at(r, c);
          out.at(r, c) = (stats.min < v && v < stats.max) ? v : stats.median;
          break;
        }
        if (w >= config.max_window) {
          out.at(r, c) = stats.median;
          break;
        }
        w += 2;
      }
    }
  }
  return out;
}

Image filter_dbmf(const Image& image, WindowSpec window) {
  make_window(window.size);
  Image working = image;
  std::vector<std::uint8_t> buf;
  for (int r = 0; r < working.height; ++r) {
    for (int c = 0; c < working.width; ++c) {
      extract_window_into(working, r, c, window.size, buf);
      const WindowStats stats = window_stats_in_place(buf);
      const std::uint8_t v = working.at(r, c);
      if (stats.min < v && v < stats.max) {
        continue;
      }
      working.at(r, c) = median_clean(stats)
                             ? stats.median
                             : left_fallback(working, r, c, stats.median);
    }
  }
  return working;
}

Image filter_adbmf(const Image& image, const AdaptiveConfig& config) {
  validate(config);
  Image working = image;
  std::vector<std::uint8_t> buf;
  for (int r = 0; r < working.height; ++r) {
    for (int c = 0; c < working.width; ++c) {
      int w = config.start_window.size;
      extract_window_into(working, r, c, w, buf);
      WindowStats stats = window_stats_in_place(buf);
      const std::uint8_t v = working.at(r, c);
      if (stats.min < v && v < stats.max) {
        continue;
      }
      while (!median_clean(stats) && w < config.max_window) {
        w += 2;
        extract_window_into(working, r, c, w, buf);
        stats = window_stats_in_place(buf);
      }
      working.at(r, c) = median_clean(stats)
                             ? stats.median
                             : left_fallback(working, r, c, stats.median);
    }
  }
  return working;
}

}  // namespace impulse

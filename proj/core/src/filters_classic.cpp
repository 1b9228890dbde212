#include "impulse/filters_classic.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace impulse {

namespace {

void validate(const ClassicConfig& config) {
  make_window(config.window.size);
  if (config.center_weight < 1 || config.center_weight % 2 == 0) {
    throw std::invalid_argument("center weight must be odd and positive");
  }
  if (config.tsm_threshold < 0 || config.tsm_threshold > 255) {
    throw std::invalid_argument("tri-state threshold must be in [0,255]");
  }
}

}  // namespace

Image filter_sm(const Image& image, WindowSpec window) {
  make_window(window.size);
  Image out = image;
  std::vector<std::uint8_t> buf;
  buf.reserve(static_cast<std::size_t>(window.size) * window.size);
  for (int r = 0; r < image.height; ++r) {
    for (int c = 0; c < image.width; ++c) {
      extract_window_into(image, r, c, window.size, buf);
      out.at(r, c) = median_in_place(buf);
    }
  }
  return out;
}

Image filter_cwmf(const Image& image, const ClassicConfig& config) {
  validate(config);
  Image out = image;
  std::vector<std::uint8_t> buf;
  const int size = config.window.size;
  buf.reserve(static_cast<std::size_t>(size) * size + config.center_weight);
  for (int r = 0; r < image.height; ++r) {
    for (int c = 0; c < image.width; ++c) {
      extract_window_into(image, r, c, size, buf);
      // The full window plus weight-1 extra center copies is the same
      // multiset as the non-center neighbors plus the center repeated
      // weight times.
      buf.insert(buf.end(), static_cast<std::size_t>(config.center_weight - 1),
                 image.at(r, c));
      out.at(r, c) = median_in_place(buf);
    }
  }
  return out;
}

Image filter_tsmf(const Image& image, const ClassicConfig& config) {
  validate(config);
  const Image sm = filter_sm(image, config.window);
  const Image cwm = filter_cwmf(image, config);
  Image out = image;
  for (int r = 0; r < image.height; ++r) {
    for (int c = 0; c < image.width; ++c) {
      const int v = image.at(r, c);
      const int d1 = std::abs(v - sm.at(r, c));
      const int d2 = std::abs(v - cwm.at(r, c));
      if (config.tsm_threshold >= d1) {
        out.at(r, c) = static_cast<std::uint8_t>(v);
      } else if (d2 <= config.tsm_threshold) {
        out.at(r, c) = cwm.at(r, c);
      } else {
        out.at(r, c) = sm.at(r, c);
      }
    }
  }
  return out;
}

}  // namespace impulse

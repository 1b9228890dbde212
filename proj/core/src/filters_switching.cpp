#include "impulse/filters_switching.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace impulse {

namespace {

void validate(const SwitchingConfig& config) {
  make_window(config.window.size);
  if (config.max_window % 2 == 0 || config.max_window < config.window.size) {
    throw std::invalid_argument("max window must be odd and >= window size");
  }
  if (config.detect_iterations < 1) {
    throw std::invalid_argument("detect iterations must be >= 1");
  }
  if (config.filter_iteration_cap < 1) {
    throw std::invalid_argument("filter iteration cap must be >= 1");
  }
}

void check_flags_match(const Image& image, const FlagMap& flags) {
  if (flags.width != image.width || flags.height != image.height) {
    throw std::invalid_argument("flag map dimensions do not match image");
  }
}

// Window values drawn only from pixels whose flag is clear.
int gather_unflagged(const Image& image, const FlagMap& flags, int row, int col,
                     int size, std::vector<std::uint8_t>& out) {
  out.clear();
  const int k = size / 2;
  for (int dr = -k; dr <= k; ++dr) {
    const int r = std::clamp(row + dr, 0, image.height - 1);
    for (int dc = -k; dc <= k; ++dc) {
      const int c = std::clamp(col + dc, 0, image.width - 1);
      if (!flags.at(r, c)) {
        out.push_back(image.at(r, c));
      }
    }
  }
  return static_cast<int>(out.size());
}

int detect_round(Image& image, FlagMap& flags, const SwitchingConfig& config,
                 bool require_order_stats) {
  const Image snapshot = image;
  int newly_flagged = 0;
  std::vector<std::uint8_t> buf;
  for (int r = 0; r < image.height; ++r) {
    for (int c = 0; c < image.width; ++c) {
      if (flags.at(r, c)) {
        continue;  // flags only move clean -> flagged; values of already
                   // flagged pixels stay put
      }
      extract_window_into(snapshot, r, c, config.window.size, buf);
      std::uint8_t median;
      bool keep;
      if (require_order_stats) {
        const WindowStats stats = window_stats_in_place(buf);
        median = stats.median;
        keep = std::abs(static_cast<int>(snapshot.at(r, c)) - median) <
                   config.detect_threshold &&
               stats.min < stats.median && stats.median < stats.max;
      } else {
        median = median_in_place(buf);
        keep = std::abs(static_cast<int>(snapshot.at(r, c)) - median) <
               config.detect_threshold;
      }
      if (!keep) {
        flags.set(r, c, true);
        image.at(r, c) = median;  // used by the next round
        ++newly_flagged;
      }
    }
  }
  return newly_flagged;
}

int filter_round(Image& image, FlagMap& flags, const SwitchingConfig& config,
                 bool adaptive) {
  const Image snapshot = image;
  const FlagMap flag_snapshot = flags;
  int cleared = 0;
  std::vector<std::uint8_t> buf;
  for (int r = 0; r < image.height; ++r) {
    for (int c = 0; c < image.width; ++c) {
      if (!flag_snapshot.at(r, c)) {
        continue;
      }
      if (!adaptive) {
        const int m =
            gather_unflagged(snapshot, flag_snapshot, r, c, config.window.size, buf);
        if (m > 0) {
          image.at(r, c) = median_in_place(buf);
          flags.set(r, c, false);
          ++cleared;
        }
        continue;
      }
      for (int w = config.window.size;; w += 2) {
        const int m = gather_unflagged(snapshot, flag_snapshot, r, c, w, buf);
        if (w < config.max_window) {
          if (2 * m >= w * w) {
            image.at(r, c) = median_in_place(buf);
            flags.set(r, c, false);
            ++cleared;
            break;
          }
          // window too corrupted: grow by 2 per side and retry
        } else {
          if (m > 0) {
            image.at(r, c) = median_in_place(buf);
            flags.set(r, c, false);
            ++cleared;
          }
          break;
        }
      }
    }
  }
  return cleared;
}

// Unrestricted window medians for pixels no round could resolve.
void fallback_fill(Image& image, const FlagMap& flags, WindowSpec window) {
  const Image snapshot = image;
  std::vector<std::uint8_t> buf;
  for (int r = 0; r < image.height; ++r) {
    for (int c = 0; c < image.width; ++c) {
      if (flags.at(r, c)) {
        extract_window_into(snapshot, r, c, window.size, buf);
        image.at(r, c) = median_in_place(buf);
      }
    }
  }
}

Detection run_detection(const Image& image, const SwitchingConfig& config,
                        bool require_order_stats) {
  validate(config);
  Detection result{image, make_flags(image.width, image.height)};
  for (int n = 0; n < config.detect_iterations; ++n) {
    detect_round(result.image, result.flags, config, require_order_stats);
  }
  return result;
}

Image run_filtering(const Image& corrupted, const FlagMap& flags,
                    const SwitchingConfig& config, bool adaptive) {
  validate(config);
  check_flags_match(corrupted, flags);
  Image image = corrupted;
  FlagMap working = flags;
  for (int round = 0;
       round < config.filter_iteration_cap && working.count() > 0; ++round) {
    if (filter_round(image, working, config, adaptive) == 0) {
      break;  // a stalled round stays stalled; nothing further can clear
    }
  }
  if (working.count() > 0) {
    fallback_fill(image, working, config.window);
  }
  return image;
}

}  // namespace

Detection psmf_detect(const Image& image, const SwitchingConfig& config) {
  return run_detection(image, config, false);
}

Detection apsmf_detect(const Image& image, const SwitchingConfig& config) {
  return run_detection(image, config, true);
}

Image psmf_filter(const Image& corrupted, const FlagMap& flags,
                  const SwitchingConfig& config) {
  return run_filtering(corrupted, flags, config, false);
}

Image apsmf_filter(const Image& corrupted, const FlagMap& flags,
                   const SwitchingConfig& config) {
  return run_filtering(corrupted, flags, config, true);
}

Image filter_psmf(const Image& image, const SwitchingConfig& config) {
  return psmf_filter(image, psmf_detect(image, config).flags, config);
}

Image filter_apsmf(const Image& image, const SwitchingConfig& config) {
  return apsmf_filter(image, apsmf_detect(image, config).flags, config);
}

int psmf_detect_round(Image& image, FlagMap& flags, const SwitchingConfig& config) {
  validate(config);
  check_flags_match(image, flags);
  return detect_round(image, flags, config, false);
}

int apsmf_detect_round(Image& image, FlagMap& flags, const SwitchingConfig& config) {
  validate(config);
  check_flags_match(image, flags);
  return detect_round(image, flags, config, true);
}

int psmf_filter_round(Image& image, FlagMap& flags, const SwitchingConfig& config) {
  validate(config);
  check_flags_match(image, flags);
  return filter_round(image, flags, config, false);
}

int apsmf_filter_round(Image& image, FlagMap& flags, const SwitchingConfig& config) {
  validate(config);
  check_flags_match(image, flags);
  return filter_round(image, flags, config, true);
}

}  // namespace impulse

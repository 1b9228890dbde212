#pragma once

#include "impulse/image.hpp"
#include "impulse/window.hpp"

namespace impulse {

struct AdaptiveConfig {
  WindowSpec start_window{3};
  int max_window = 15;  // odd, >= start_window.size
};

/// Adaptive median filter. Per pixel, reading the input image: grow the
/// window from start_window until window-min < median < window-max, then
/// keep the pixel when it is strictly inside (min, max) and take the
/// median otherwise. If max_window is reached first, the max-window median
/// is the output.
Image filter_amf(const Image& image, const AdaptiveConfig& config);

/// Decision-based median filter. Raster scan over a working copy, so
/// already-filtered pixels feed later window statistics. A pixel strictly
/// inside (window-min, window-max) is kept; otherwise it takes the window
/// median when that median is not itself an impulse, and the left
/// neighbor of the output when it is (above neighbor at column 0, the
/// median unconditionally at the origin).
Image filter_dbmf(const Image& image, WindowSpec window);

/// Decision-based filter with an adaptive escape: when the median is an
/// impulse the window grows by 2 per side up to max_window before the
/// left-neighbor fallback applies.
Image filter_adbmf(const Image& image, const AdaptiveConfig& config);

}  // namespace impulse

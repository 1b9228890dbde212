#pragma once

#include "impulse/image.hpp"
#include "impulse/window.hpp"

namespace impulse {

struct ClassicConfig {
  WindowSpec window{3};
  int center_weight = 3;  // odd, >= 1
  int tsm_threshold = 20;  // in [0,255]
};

/// Standard median filter: every pixel becomes the median of its window.
Image filter_sm(const Image& image, WindowSpec window);

/// Center-weighted median: the center pixel is repeated center_weight
/// times in the window multiset before taking the median.
Image filter_cwmf(const Image& image, const ClassicConfig& config);

/// Tri-state median. Per pixel, with d1 = |pixel - SM| and
/// d2 = |pixel - CWM|: keep the pixel when threshold >= d1, take the CWM
/// value when d2 <= threshold < d1, the SM value otherwise. Both
/// sub-filter outputs are computed from the input image.
Image filter_tsmf(const Image& image, const ClassicConfig& config);

}  // namespace impulse

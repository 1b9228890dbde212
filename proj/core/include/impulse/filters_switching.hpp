#pragma once

#include "impulse/image.hpp"
#include "impulse/noise.hpp"
#include "impulse/window.hpp"

namespace impulse {

struct SwitchingConfig {
  WindowSpec window{3};
  int detect_threshold = 40;   // flag when |pixel - median| >= threshold
  int detect_iterations = 3;   // detection rounds, >= 1
  int max_window = 15;         // adaptive variant only; odd, >= window.size
  int filter_iteration_cap = 100;
};

struct Detection {
  Image image;  // sequence after the final detection round
  FlagMap flags;
};

/// Progressive impulse detection: runs exactly detect_iterations rounds.
/// Each round takes the per-pixel window median of the current sequence,
/// flags pixels with |pixel - median| >= detect_threshold, and replaces
/// newly flagged pixels with that median for the next round.
Detection psmf_detect(const Image& image, const SwitchingConfig& config);

/// Same loop, stricter keep rule: a pixel stays unflagged only if
/// |pixel - median| < detect_threshold AND window-min < median < window-max.
Detection apsmf_detect(const Image& image, const SwitchingConfig& config);

/// Flag-guided filtering over the corrupted image. Per round, every flagged
/// pixel whose window holds at least one unflagged value is replaced by the
/// median of those values and unflagged. Rounds repeat until no flags
/// remain or the iteration cap is hit; pixels still flagged afterwards are
/// filled with the unrestricted window median.
Image psmf_filter(const Image& corrupted, const FlagMap& flags,
                  const SwitchingConfig& config);

/// Adaptive filtering phase: a flagged pixel is replaced only when the
/// unflagged count covers at least half the window; otherwise its window
/// grows by 2 per side up to max_window, where any unflagged pixel
/// suffices. Remaining pixels fall back to the unrestricted median.
Image apsmf_filter(const Image& corrupted, const FlagMap& flags,
                   const SwitchingConfig& config);

/// Detection followed by filtering. Filtering starts from the original
/// corrupted pixels; only the detection flags carry over.
Image filter_psmf(const Image& image, const SwitchingConfig& config);
Image filter_apsmf(const Image& image, const SwitchingConfig& config);

// Single rounds, exposed so iteration-level invariants are testable.
// Detection rounds return the newly flagged count, filtering rounds the
// cleared count. Each round reads a frozen snapshot of (image, flags).
int psmf_detect_round(Image& image, FlagMap& flags, const SwitchingConfig& config);
int apsmf_detect_round(Image& image, FlagMap& flags, const SwitchingConfig& config);
int psmf_filter_round(Image& image, FlagMap& flags, const SwitchingConfig& config);
int apsmf_filter_round(Image& image, FlagMap& flags, const SwitchingConfig& config);

}  // namespace impulse

#include <random>
#include <vector>

#include "doctest.h"
#include "impulse/filters_decision.hpp"
#include "impulse/noise.hpp"
#include "oracles.hpp"
#include "support.hpp"

using impulse::AdaptiveConfig;
using impulse::Image;

TEST_CASE("filter_amf leaves constant images alone") {
  const Image img = impulse::make_filled(9, 9, 100);
  CHECK(impulse::filter_amf(img, {}) == img);
}

TEST_CASE("filter_amf replaces an isolated pepper with the window median") {
  Image img;
  img.width = 5;
  img.height = 5;
  img.pixels.resize(25);
  for (int r = 0; r < 5; ++r) {
    for (int c = 0; c < 5; ++c) {
      img.at(r, c) = static_cast<std::uint8_t>(95 + (r * 5 + c) % 11);
    }
  }
  img.at(2, 2) = 0;
  const Image out = impulse::filter_amf(img, {});
  // level A passes at 3x3 (0 < median < max), level B sees 0 == window min
  CHECK(out.at(2, 2) == oracle::median_sorted(oracle::window(img, 2, 2, 3)));
}

TEST_CASE("filter_amf keeps pixels strictly inside their window range") {
  const Image img = testutil::ramp_image(32, 16);
  const Image out = impulse::filter_amf(img, {});
  for (int r = 0; r < img.height; ++r) {
    for (int c = 1; c + 1 < img.width; ++c) {
      CHECK(out.at(r, c) == img.at(r, c));
    }
  }
}

TEST_CASE("filter_amf outputs the max-window median when growth is exhausted") {
  Image img;
  img.width = 8;
  img.height = 8;
  img.pixels.resize(64);
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      img.at(r, c) = (r + c) % 2 == 0 ? 0 : 255;
    }
  }
  AdaptiveConfig cfg;
  cfg.max_window = 5;
  const Image out = impulse::filter_amf(img, cfg);
  // the median is an impulse at every size, so level A never passes
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      CHECK(out.at(r, c) == oracle::median_sorted(oracle::window(img, r, c, 5)));
    }
  }
}

TEST_CASE("filter_amf output is the pixel or some visited-window median") {
  std::mt19937_64 rng(61);
  const Image clean = testutil::random_image(rng, 16, 16, 60, 190);
  const Image noisy = impulse::inject_impulse(clean, {0.3, 13}).image;
  const Image out = impulse::filter_amf(noisy, {});
  for (int r = 0; r < noisy.height; ++r) {
    for (int c = 0; c < noisy.width; ++c) {
      bool ok = out.at(r, c) == noisy.at(r, c);
      for (int w = 3; w <= 15 && !ok; w += 2) {
        ok = out.at(r, c) == oracle::median_sorted(oracle::window(noisy, r, c, w));
      }
      CHECK(ok);
    }
  }
}

TEST_CASE("filter_dbmf passes a ramp through untouched") {
  const Image img = testutil::ramp_image(64, 32);
  CHECK(impulse::filter_dbmf(img, {3}) == img);
}

TEST_CASE("filter_dbmf repairs a salt pixel from a clean median") {
  // ramp with one salt pixel: everything before it stays put, and the
  // window median at its turn equals the ramp value underneath
  Image img = testutil::ramp_image(5, 5, 100);
  img.at(2, 2) = 255;
  CHECK(impulse::filter_dbmf(img, {3}) == testutil::ramp_image(5, 5, 100));
}

TEST_CASE("filter_dbmf falls back to the filtered left neighbor") {
  // at (0,2): window median 255 (impulse), left neighbor kept at 128
  const int values[] = {0,   128, 255, 255,  //
                        255, 0,   255, 255};
  const Image img = impulse::make_image(4, 2, values);
  const Image out = impulse::filter_dbmf(img, {3});
  CHECK(out.at(0, 1) == 128);  // strictly inside, kept
  CHECK(out.at(0, 2) == 128);  // left-neighbor fallback
}

TEST_CASE("filter_dbmf column-zero fallback uses the pixel above") {
  const int values[] = {255, 255,  //
                        0,   0,    //
                        0,   0};
  const Image img = impulse::make_image(2, 3, values);
  const Image out = impulse::filter_dbmf(img, {3});
  // (1,0) has median 0 (impulse); a plain median replacement would give 0,
  // the above-neighbor fallback gives the filtered 255
  CHECK(out.at(1, 0) == 255);
}

TEST_CASE("filter_dbmf origin fallback takes the median unconditionally") {
  const int values[] = {0, 255,  //
                        255, 255};
  const Image img = impulse::make_image(2, 2, values);
  const Image out = impulse::filter_dbmf(img, {3});
  CHECK(out.at(0, 0) == 255);
}

TEST_CASE("filter_dbmf keeps an all-salt image unchanged") {
  const Image img = impulse::make_filled(6, 6, 255);
  CHECK(impulse::filter_dbmf(img, {3}) == img);
}

TEST_CASE("filter_adbmf equals filter_dbmf when every median is clean") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    const Image img = testutil::random_image(rng, 12, 12, 50, 200);
    CHECK(impulse::filter_adbmf(img, {}) == impulse::filter_dbmf(img, {3}));
  }
}

TEST_CASE("filter_adbmf grows the window until the median comes clean") {
  // at (0,1) the 3x3 median is 255 (impulse) but the 5x5 median is 100;
  // (0,0) sits strictly inside its window and survives untouched at 90
  const int values[] = {90,  255, 255, 100, 100,  //
                        0,   255, 0,   100, 100,  //
                        100, 100, 100, 100, 100,  //
                        100, 100, 100, 100, 100,  //
                        100, 100, 100, 100, 100};
  const Image img = impulse::make_image(5, 5, values);

  const Image grown = impulse::filter_adbmf(img, {});
  CHECK(grown.at(0, 0) == 90);
  CHECK(grown.at(0, 1) == 100);

  // with growth forbidden the same pixel takes the left-neighbor fallback
  AdaptiveConfig pinned;
  pinned.max_window = 3;
  const Image fallback = impulse::filter_adbmf(img, pinned);
  CHECK(fallback.at(0, 1) == 90);
}

TEST_CASE("filter_adbmf falls back left inside oversized impulse regions") {
  // clean ramp on the left, a solid salt slab wider than max_window
  Image img = testutil::ramp_image(24, 24, 60);
  for (int r = 0; r < 24; ++r) {
    for (int c = 4; c < 24; ++c) {
      img.at(r, c) = 255;
    }
  }
  const Image out = impulse::filter_adbmf(img, {});
  CHECK(out.at(12, 20) == out.at(12, 19));

  const Image salt = impulse::make_filled(20, 20, 255);
  CHECK(impulse::filter_adbmf(salt, {}) == salt);
}

TEST_CASE("decision filters preserve dimensions and determinism") {
  std::mt19937_64 rng(63);
  const Image clean = testutil::random_image(rng, 10, 14, 40, 210);
  const Image noisy = impulse::inject_impulse(clean, {0.6, 21}).image;
  const Image a = impulse::filter_adbmf(noisy, {});
  const Image b = impulse::filter_adbmf(noisy, {});
  CHECK(a == b);
  CHECK(a.width == noisy.width);
  CHECK(a.height == noisy.height);
  CHECK(impulse::filter_amf(noisy, {}) == impulse::filter_amf(noisy, {}));
  CHECK(impulse::filter_dbmf(noisy, {3}) == impulse::filter_dbmf(noisy, {3}));
}

TEST_CASE("adaptive configs are validated") {
  const Image img = impulse::make_filled(4, 4, 7);
  AdaptiveConfig bad;
  bad.max_window = 4;
  CHECK_THROWS_AS(impulse::filter_amf(img, bad), std::invalid_argument);
  bad.max_window = 1;
  CHECK_THROWS_AS(impulse::filter_adbmf(img, bad), std::invalid_argument);
  CHECK_THROWS_AS(impulse::filter_dbmf(img, {2}), std::invalid_argument);
}

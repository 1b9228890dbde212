#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "doctest.h"
#include "impulse/image.hpp"
#include "support.hpp"

using impulse::Image;
using impulse::PgmError;

namespace {

std::vector<std::uint8_t> pgm_bytes(std::string_view header,
                                    std::vector<std::uint8_t> raster) {
  std::vector<std::uint8_t> bytes(header.begin(), header.end());
  bytes.insert(bytes.end(), raster.begin(), raster.end());
  return bytes;
}

}  // namespace

TEST_CASE("make_image builds images from int sequences") {
  const int values[] = {0, 255, 128, 7};
  const Image img = impulse::make_image(2, 2, values);
  CHECK(img.width == 2);
  CHECK(img.height == 2);
  CHECK(img.at(0, 0) == 0);
  CHECK(img.at(0, 1) == 255);
  CHECK(img.at(1, 0) == 128);
  CHECK(img.at(1, 1) == 7);

  const int pepper[] = {0};
  const Image tiny = impulse::make_image(1, 1, pepper);
  CHECK(tiny.size() == 1);
  CHECK(tiny.at(0, 0) == 0);
}

TEST_CASE("make_image rejects bad input") {
  const int three[] = {0, 255, 128};
  CHECK_THROWS_AS(impulse::make_image(2, 2, three), std::invalid_argument);
  const int big[] = {0, 255, 128, 256};
  CHECK_THROWS_AS(impulse::make_image(2, 2, big), std::out_of_range);
  const int neg[] = {0, -1, 128, 7};
  CHECK_THROWS_AS(impulse::make_image(2, 2, neg), std::out_of_range);
  CHECK_THROWS_AS(impulse::make_image(0, 1, std::span<const int>{}),
                  std::invalid_argument);
}

TEST_CASE("read_pgm parses binary PGM") {
  const Image img = impulse::read_pgm(pgm_bytes("P5\n2 2\n255\n", {0, 255, 128, 7}));
  CHECK(img.width == 2);
  CHECK(img.height == 2);
  CHECK(img.pixels == std::vector<std::uint8_t>{0, 255, 128, 7});
}

TEST_CASE("read_pgm skips header comments") {
  const Image img = impulse::read_pgm(pgm_bytes("P5\n# c\n1 1\n255\n", {9}));
  CHECK(img.width == 1);
  CHECK(img.height == 1);
  CHECK(img.at(0, 0) == 9);

  // comments are legal between any two header tokens
  const Image img2 =
      impulse::read_pgm(pgm_bytes("P5 # one\n2 # two\n1 # three\n255\n", {4, 5}));
  CHECK(img2.width == 2);
  CHECK(img2.height == 1);
}

TEST_CASE("read_pgm rejects malformed input") {
  CHECK_THROWS_AS(impulse::read_pgm(pgm_bytes("P2\n1 1\n255\n", {9})), PgmError);
  CHECK_THROWS_AS(impulse::read_pgm(pgm_bytes("P5\n1 1\n65535\n", {9, 9})), PgmError);
  CHECK_THROWS_AS(impulse::read_pgm(pgm_bytes("P5\n2 2\n255\n", {1, 2, 3})), PgmError);
  CHECK_THROWS_AS(impulse::read_pgm(pgm_bytes("P5\n2\n", {})), PgmError);
  CHECK_THROWS_AS(impulse::read_pgm(pgm_bytes("P5\nab 2\n255\n", {1, 2})), PgmError);
}

TEST_CASE("write_pgm emits the canonical layout") {
  Image img;
  img.width = 1;
  img.height = 1;
  img.pixels = {0};
  CHECK(impulse::write_pgm(img) == pgm_bytes("P5\n1 1\n255\n", {0}));

  Image row;
  row.width = 2;
  row.height = 1;
  row.pixels = {255, 0};
  CHECK(impulse::write_pgm(row) == pgm_bytes("P5\n2 1\n255\n", {255, 0}));
}

TEST_CASE("pgm round trip is the identity on valid images") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> side(1, 16);
  for (int i = 0; i < 50; ++i) {
    const Image img = testutil::random_image(rng, side(rng), side(rng));
    const auto bytes = impulse::write_pgm(img);
    CHECK(impulse::read_pgm(bytes) == img);

    const std::string header = "P5\n" + std::to_string(img.width) + " " +
                               std::to_string(img.height) + "\n255\n";
    CHECK(bytes.size() == header.size() + img.size());
  }
}

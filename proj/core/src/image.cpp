#include "impulse/image.hpp"

#include <fstream>
#include <string>

namespace impulse {

Image make_image(int width, int height, std::span<const int> values) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("image dimensions must be positive");
  }
  if (values.size() != static_cast<std::size_t>(width) * height) {
    throw std::invalid_argument("pixel count " + std::to_string(values.size()) +
                                " does not match " + std::to_string(width) + "x" +
                                std::to_string(height));
  }
  Image image;
  image.width = width;
  image.height = height;
  image.pixels.reserve(values.size());
  for (int v : values) {
    if (v < 0 || v > 255) {
      throw std::out_of_range("pixel value " + std::to_string(v) + " outside [0,255]");
    }
    image.pixels.push_back(static_cast<std::uint8_t>(v));
  }
  return image;
}

Image make_filled(int width, int height, std::uint8_t value) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("image dimensions must be positive");
  }
  Image image;
  image.width = width;
  image.height = height;
  image.pixels.assign(static_cast<std::size_t>(width) * height, value);
  return image;
}

namespace {

bool is_pgm_space(std::uint8_t b) {
  return b == ' ' || b == '\t' || b == '\n' || b == '\r' || b == '\v' || b == '\f';
}

// Next whitespace-delimited header token; '#' starts a comment running to
// end of line.
std::string next_token(std::span<const std::uint8_t> bytes, std::size_t& pos) {
  while (pos < bytes.size()) {
    if (is_pgm_space(bytes[pos])) {
      ++pos;
    } else if (bytes[pos] == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
    } else {
      break;
    }
  }
  std::string token;
  while (pos < bytes.size() && !is_pgm_space(bytes[pos]) && bytes[pos] != '#') {
    token.push_back(static_cast<char>(bytes[pos++]));
  }
  if (token.empty()) {
    throw PgmError("truncated PGM header");
  }
  return token;
}

int parse_header_int(const std::string& token, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw PgmError(std::string("malformed PGM ") + what + ": '" + token + "'");
  }
  if (used != token.size() || value < 0) {
    throw PgmError(std::string("malformed PGM ") + what + ": '" + token + "'");
  }
  return value;
}

}  // namespace

Image read_pgm(std::span<const std::uint8_t> bytes) {
  std::size_t pos = 0;
  const std::string magic = next_token(bytes, pos);
  if (magic != "P5") {
    throw PgmError("not a binary PGM (expected magic P5, got '" + magic + "')");
  }
  const int width = parse_header_int(next_token(bytes, pos), "width");
  const int height = parse_header_int(next_token(bytes, pos), "height");
  const int maxval = parse_header_int(next_token(bytes, pos), "maxval");
  if (width < 1 || height < 1) {
    throw PgmError("PGM dimensions must be positive");
  }
  if (maxval != 255) {
    throw PgmError("unsupported PGM maxval " + std::to_string(maxval) + " (only 255)");
  }
  if (pos >= bytes.size() || !is_pgm_space(bytes[pos])) {
    throw PgmError("missing whitespace between maxval and raster");
  }
  ++pos;
  const std::size_t need = static_cast<std::size_t>(width) * height;
  if (bytes.size() - pos < need) {
    throw PgmError("truncated PGM raster: need " + std::to_string(need) + " bytes, have " +
                   std::to_string(bytes.size() - pos));
  }
  Image image;
  image.width = width;
  image.height = height;
  image.pixels.assign(bytes.begin() + pos, bytes.begin() + pos + need);
  return image;
}

std::vector<std::uint8_t> write_pgm(const Image& image) {
  const std::string header = "P5\n" + std::to_string(image.width) + " " +
                             std::to_string(image.height) + "\n255\n";
  std::vector<std::uint8_t> out;
  out.reserve(header.size() + image.pixels.size());
  out.insert(out.end(), header.begin(), header.end());
  out.insert(out.end(), image.pixels.begin(), image.pixels.end());
  return out;
}

Image load_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return read_pgm(bytes);
}

void save_pgm(const std::filesystem::path& path, const Image& image) {
  const auto bytes = write_pgm(image);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw std::runtime_error("short write to " + path.string());
  }
}

}  // namespace impulse

#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lsbxor/error.hpp"
#include "lsbxor/image.hpp"

namespace lsbxor {

enum class PgmVariant { ascii_p2, binary_p5 };

namespace detail {

// Cursor over a PGM byte buffer. '#' starts a comment that runs to end of line.
class PgmScanner {
 public:
  explicit PgmScanner(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  // Next whitespace-delimited token, or nullopt at end of input.
  std::optional<std::string_view> token() {
    skip_space_and_comments();
    if (pos_ >= bytes_.size()) return std::nullopt;
    const auto start = pos_;
    while (pos_ < bytes_.size() && !std::isspace(bytes_[pos_]) && bytes_[pos_] != '#') ++pos_;
    return std::string_view(reinterpret_cast<const char*>(bytes_.data()) + start, pos_ - start);
  }

  std::size_t pos() const noexcept { return pos_; }
  void advance(std::size_t n) noexcept { pos_ += n; }
  std::span<const std::uint8_t> rest() const noexcept { return bytes_.subspan(pos_); }
  bool at_space() const noexcept { return pos_ < bytes_.size() && std::isspace(bytes_[pos_]); }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

inline std::optional<std::uint64_t> parse_decimal(std::string_view tok) {
  if (tok.empty() || tok.size() > 18) return std::nullopt;
  std::uint64_t v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

inline std::uint64_t header_field(PgmScanner& scan, const char* name) {
  const auto tok = scan.token();
  if (!tok) throw Error(Errc::truncated_image, std::string("header ends before ") + name);
  const auto v = parse_decimal(*tok);
  if (!v) {
    throw Error(Errc::unsupported_format, std::string("bad ") + name + " field '" + std::string(*tok) + "'");
  }
  return *v;
}

}  // namespace detail

// Reads P2 (ASCII) or P5 (binary) graymaps with maxval 255. Bytes after the
// raster of a P5 file are ignored.
inline GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
  detail::PgmScanner scan(bytes);
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw Error(Errc::unsupported_format, "not a P2/P5 graymap");
  }
  const bool binary = bytes[1] == '5';
  scan.advance(2);
  if (!scan.at_space() && scan.rest().size() > 0 && scan.rest()[0] != '#') {
    throw Error(Errc::unsupported_format, "magic number not followed by whitespace");
  }

  const auto width = detail::header_field(scan, "width");
  const auto height = detail::header_field(scan, "height");
  const auto maxval = detail::header_field(scan, "maxval");
  if (width == 0 || height == 0 || width > (1u << 24) || height > (1u << 24)) {
    throw Error(Errc::unsupported_dimensions,
                std::to_string(width) + "x" + std::to_string(height) + " is not a usable size");
  }
  if (maxval != 255) {
    throw Error(Errc::unsupported_depth, "maxval " + std::to_string(maxval) + ", only 255 is supported");
  }

  const std::size_t count = static_cast<std::size_t>(width * height);
  std::vector<std::uint8_t> pixels;
  pixels.reserve(count);

  if (binary) {
    // Exactly one whitespace byte separates maxval from the raster.
    if (!scan.at_space()) throw Error(Errc::truncated_image, "missing raster after header");
    scan.advance(1);
    const auto raster = scan.rest();
    if (raster.size() < count) {
      throw Error(Errc::truncated_image, "raster holds " + std::to_string(raster.size()) + " of " +
                                             std::to_string(count) + " pixels");
    }
    pixels.assign(raster.begin(), raster.begin() + static_cast<std::ptrdiff_t>(count));
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      const auto tok = scan.token();
      if (!tok) {
        throw Error(Errc::truncated_image,
                    "raster holds " + std::to_string(i) + " of " + std::to_string(count) + " pixels");
      }
      const auto v = detail::parse_decimal(*tok);
      if (!v || *v > 255) throw Error(Errc::malformed_sample, "sample '" + std::string(*tok) + "'");
      pixels.push_back(static_cast<std::uint8_t>(*v));
    }
  }
  return GrayImage(static_cast<std::size_t>(width), static_cast<std::size_t>(height), std::move(pixels));
}

// Canonical form: "P5\n<w> <h>\n255\n" then raw bytes, or the same header with
// P2 and one text row per image row, single-space separated.
inline std::vector<std::uint8_t> write_pgm(const GrayImage& img, PgmVariant variant = PgmVariant::binary_p5) {
  const bool binary = variant == PgmVariant::binary_p5;
  std::string header = binary ? "P5\n" : "P2\n";
  header += std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";

  std::vector<std::uint8_t> out(header.begin(), header.end());
  if (binary) {
    out.insert(out.end(), img.pixels().begin(), img.pixels().end());
    return out;
  }
  for (std::size_t y = 0; y < img.height(); ++y) {
    std::string line;
    for (std::size_t x = 0; x < img.width(); ++x) {
      if (x) line.push_back(' ');
      line += std::to_string(img.at(x, y));
    }
    line.push_back('\n');
    out.insert(out.end(), line.begin(), line.end());
  }
  return out;
}

}  // namespace lsbxor

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lsbxor/error.hpp"

namespace lsbxor {

// 8-bit grayscale raster, row-major. Width and height are at least 1.
class GrayImage {
 public:
  GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
      : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (width_ == 0 || height_ == 0) {
      throw Error(Errc::invalid_image, "image dimensions must be at least 1x1");
    }
    if (pixels_.size() != width_ * height_) {
      throw Error(Errc::invalid_image, "pixel buffer holds " + std::to_string(pixels_.size()) +
                                           " values, expected " +
                                           std::to_string(width_ * height_));
    }
  }

  GrayImage(std::size_t width, std::size_t height, std::uint8_t fill = 0)
      : GrayImage(width, height, std::vector<std::uint8_t>(width * height, fill)) {}

  // Single-row image, the layout used for share files and the worked examples.
  static GrayImage row(std::vector<std::uint8_t> pixels) {
    auto n = pixels.size();
    return GrayImage(n, 1, std::move(pixels));
  }

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::span<std::uint8_t> pixels() noexcept { return pixels_; }

  std::uint8_t at(std::size_t x, std::size_t y) const { return pixels_.at(y * width_ + x); }
  std::uint8_t& at(std::size_t x, std::size_t y) { return pixels_.at(y * width_ + x); }

  bool same_shape(const GrayImage& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> pixels_;
};

}  // namespace lsbxor

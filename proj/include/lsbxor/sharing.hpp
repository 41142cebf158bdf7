#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lsbxor/error.hpp"
#include "lsbxor/image.hpp"

namespace lsbxor {

// Two-way split of a linearized image. share1 holds the pixels at 1-based
// odd positions (0-based 0, 2, 4, ...), share2 the rest.
struct PixelShares {
  std::vector<std::uint8_t> share1;
  std::vector<std::uint8_t> share2;
  std::size_t total_len = 0;

  bool consistent() const noexcept {
    return share1.size() == (total_len + 1) / 2 && share2.size() == total_len / 2;
  }

  friend bool operator==(const PixelShares&, const PixelShares&) = default;
};

inline PixelShares split_pixels(std::span<const std::uint8_t> pixels) {
  PixelShares out;
  out.total_len = pixels.size();
  out.share1.reserve((pixels.size() + 1) / 2);
  out.share2.reserve(pixels.size() / 2);
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    (i % 2 == 0 ? out.share1 : out.share2).push_back(pixels[i]);
  }
  return out;
}

// Position is the row-major linear index.
inline PixelShares split_image(const GrayImage& img) { return split_pixels(img.pixels()); }

inline std::vector<std::uint8_t> merge_shares(const PixelShares& shares) {
  if (!shares.consistent()) {
    throw Error(Errc::malformed_shares,
                "share lengths " + std::to_string(shares.share1.size()) + " and " +
                    std::to_string(shares.share2.size()) + " do not match a total of " +
                    std::to_string(shares.total_len) + " pixels");
  }
  std::vector<std::uint8_t> out(shares.total_len);
  for (std::size_t k = 0; k < shares.share1.size(); ++k) out[2 * k] = shares.share1[k];
  for (std::size_t k = 0; k < shares.share2.size(); ++k) out[2 * k + 1] = shares.share2[k];
  return out;
}

// Rebuilds shares from two separately distributed pieces; the original pixel
// count is implied by their lengths.
inline PixelShares make_shares(std::vector<std::uint8_t> share1, std::vector<std::uint8_t> share2) {
  PixelShares out{std::move(share1), std::move(share2), 0};
  out.total_len = out.share1.size() + out.share2.size();
  if (!out.consistent()) {
    throw Error(Errc::malformed_shares,
                "share1 must hold the same number of pixels as share2 or exactly one more");
  }
  return out;
}

}  // namespace lsbxor

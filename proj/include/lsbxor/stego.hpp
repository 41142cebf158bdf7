#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lsbxor/bitcodec.hpp"
#include "lsbxor/error.hpp"
#include "lsbxor/image.hpp"
#include "lsbxor/sharing.hpp"

namespace lsbxor {

// One stream bit per pixel LSB.
inline std::size_t capacity_bits(const GrayImage& img) noexcept { return img.width() * img.height(); }

namespace detail {

inline void require_capacity(std::size_t needed, std::size_t available) {
  if (needed > available) {
    throw Error(Errc::capacity_exceeded, "need " + std::to_string(needed) + " bits, image holds " +
                                             std::to_string(available));
  }
}

inline std::uint8_t xor_lsb(std::uint8_t pixel, std::uint8_t bit) noexcept {
  return static_cast<std::uint8_t>((pixel & 0xFEu) | ((pixel & 1u) ^ bit));
}

// XORs the first bits.size() share LSBs with the stream in place.
inline void xor_into_share(std::vector<std::uint8_t>& share, const BitStream& bits) {
  for (std::size_t k = 0; k < bits.size(); ++k) share[k] = xor_lsb(share[k], bits[k]);
}

inline BitStream xor_share_lsbs(const std::vector<std::uint8_t>& key_share,
                                const std::vector<std::uint8_t>& stego_share, std::size_t count) {
  BitStream out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(((key_share[k] ^ stego_share[k]) & 1u) != 0);
  return out;
}

}  // namespace detail

// Message bits are split odd/even and XORed into the LSBs of the matching key
// share; the shares are then merged back. Pixels past the message are copied.
inline GrayImage embed_bits(const GrayImage& key, const BitStream& msg) {
  detail::require_capacity(msg.size(), capacity_bits(key));

  const auto parts = split_odd_even(msg);
  auto shares = split_image(key);
  detail::xor_into_share(shares.share1, parts.odd);
  detail::xor_into_share(shares.share2, parts.even);

  return GrayImage(key.width(), key.height(), merge_shares(shares));
}

// Detector against key shares that were distributed separately. The stego
// image must hold exactly as many pixels as the shares describe.
inline BitStream extract_bits(const PixelShares& key_shares, const GrayImage& stego, std::size_t nbits) {
  if (!key_shares.consistent()) {
    throw Error(Errc::malformed_shares, "key shares are inconsistent with their pixel count");
  }
  if (key_shares.total_len != stego.size()) {
    throw Error(Errc::share_mismatch, "key shares cover " + std::to_string(key_shares.total_len) +
                                          " pixels but stego image has " +
                                          std::to_string(stego.size()));
  }
  detail::require_capacity(nbits, key_shares.total_len);

  const auto stego_shares = split_image(stego);
  const std::size_t odd_count = (nbits + 1) / 2;
  const std::size_t even_count = nbits / 2;
  return interleave(detail::xor_share_lsbs(key_shares.share1, stego_shares.share1, odd_count),
                    detail::xor_share_lsbs(key_shares.share2, stego_shares.share2, even_count));
}

inline BitStream extract_bits(const GrayImage& key, const GrayImage& stego, std::size_t nbits) {
  if (!key.same_shape(stego)) {
    throw Error(Errc::share_mismatch,
                "key is " + std::to_string(key.width()) + "x" + std::to_string(key.height()) +
                    " but stego is " + std::to_string(stego.width()) + "x" +
                    std::to_string(stego.height()));
  }
  return extract_bits(split_image(key), stego, nbits);
}

}  // namespace lsbxor

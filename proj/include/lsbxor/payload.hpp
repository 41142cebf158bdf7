#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lsbxor/bitcodec.hpp"
#include "lsbxor/error.hpp"
#include "lsbxor/image.hpp"
#include "lsbxor/stego.hpp"

namespace lsbxor {

// Frame layout (all integers big-endian):
//
//   offset 0  magic   0x53 0x4D
//   offset 2  kind    1 = text, 2 = image
//   offset 3  length  u32, number of body bytes
//   offset 7  body    text bytes, or u16 width, u16 height, row-major pixels
//
// The whole frame is embedded as one contiguous bit stream, header first.
inline constexpr std::array<std::uint8_t, 2> kFrameMagic{0x53, 0x4D};
inline constexpr std::size_t kFrameHeaderBytes = 7;
inline constexpr std::size_t kFrameHeaderBits = kFrameHeaderBytes * 8;

enum class PayloadKind : std::uint8_t { text = 1, image = 2 };

struct FrameHeader {
  PayloadKind kind;
  std::uint32_t length;

  std::size_t total_bits() const noexcept { return 8 * (kFrameHeaderBytes + std::size_t{length}); }
};

struct PayloadFrame {
  PayloadKind kind;
  std::vector<std::uint8_t> body;
  std::optional<GrayImage> image;  // decoded body when kind == image

  std::string text() const { return std::string(body.begin(), body.end()); }
};

namespace detail {

inline void put_be(std::vector<std::uint8_t>& out, std::uint64_t value, int nbytes) {
  for (int i = nbytes - 1; i >= 0; --i) out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
}

inline std::uint64_t get_be(std::span<const std::uint8_t> in, std::size_t offset, int nbytes) {
  std::uint64_t v = 0;
  for (int i = 0; i < nbytes; ++i) v = (v << 8) | in[offset + i];
  return v;
}

inline std::vector<std::uint8_t> frame_bytes(PayloadKind kind, std::span<const std::uint8_t> body) {
  if (body.size() > 0xFFFFFFFFull) {
    throw Error(Errc::unsupported_dimensions, "payload body exceeds 2^32 - 1 bytes");
  }
  std::vector<std::uint8_t> out(kFrameMagic.begin(), kFrameMagic.end());
  out.reserve(kFrameHeaderBytes + body.size());
  out.push_back(static_cast<std::uint8_t>(kind));
  put_be(out, body.size(), 4);
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

}  // namespace detail

inline std::vector<std::uint8_t> frame_text(std::span<const std::uint8_t> text) {
  return detail::frame_bytes(PayloadKind::text, text);
}

inline std::vector<std::uint8_t> frame_text(std::string_view text) {
  return frame_text(std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

inline std::vector<std::uint8_t> frame_image(const GrayImage& img) {
  if (img.width() > 0xFFFF || img.height() > 0xFFFF) {
    throw Error(Errc::unsupported_dimensions,
                std::to_string(img.width()) + "x" + std::to_string(img.height()) +
                    " does not fit 16-bit dimension fields");
  }
  std::vector<std::uint8_t> body;
  body.reserve(4 + img.size());
  detail::put_be(body, img.width(), 2);
  detail::put_be(body, img.height(), 2);
  body.insert(body.end(), img.pixels().begin(), img.pixels().end());
  return detail::frame_bytes(PayloadKind::image, body);
}

// Magic is checked before anything else: a mismatch means the key and stego
// images do not belong together.
inline FrameHeader parse_frame_header(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kFrameMagic.size()) {
    throw Error(Errc::truncated_frame, "frame shorter than its magic");
  }
  if (bytes[0] != kFrameMagic[0] || bytes[1] != kFrameMagic[1]) {
    throw Error(Errc::authentication_failure, "frame magic not found (wrong key or stego image?)");
  }
  if (bytes.size() < kFrameHeaderBytes) {
    throw Error(Errc::truncated_frame, "frame header needs 7 bytes, got " + std::to_string(bytes.size()));
  }
  const auto kind = bytes[2];
  if (kind != static_cast<std::uint8_t>(PayloadKind::text) &&
      kind != static_cast<std::uint8_t>(PayloadKind::image)) {
    throw Error(Errc::unknown_kind, "payload kind " + std::to_string(kind));
  }
  return {static_cast<PayloadKind>(kind), static_cast<std::uint32_t>(detail::get_be(bytes, 3, 4))};
}

inline PayloadFrame parse_frame(std::span<const std::uint8_t> bytes) {
  const auto header = parse_frame_header(bytes);
  const std::size_t expected = kFrameHeaderBytes + std::size_t{header.length};
  if (bytes.size() < expected) {
    throw Error(Errc::truncated_frame, "frame declares " + std::to_string(header.length) +
                                           " body bytes, only " +
                                           std::to_string(bytes.size() - kFrameHeaderBytes) +
                                           " present");
  }
  if (bytes.size() > expected) {
    throw Error(Errc::frame_length_mismatch,
                std::to_string(bytes.size() - expected) + " bytes trail the declared frame");
  }

  PayloadFrame frame{header.kind, {bytes.begin() + kFrameHeaderBytes, bytes.end()}, std::nullopt};
  if (header.kind == PayloadKind::image) {
    if (frame.body.size() < 4) {
      throw Error(Errc::truncated_frame, "image body lacks its dimension fields");
    }
    const auto w = static_cast<std::size_t>(detail::get_be(frame.body, 0, 2));
    const auto h = static_cast<std::size_t>(detail::get_be(frame.body, 2, 2));
    if (w == 0 || h == 0) {
      throw Error(Errc::unsupported_dimensions, "image payload has a zero dimension");
    }
    if (frame.body.size() != 4 + w * h) {
      throw Error(Errc::frame_length_mismatch,
                  "image payload " + std::to_string(w) + "x" + std::to_string(h) + " needs " +
                      std::to_string(4 + w * h) + " body bytes, frame declares " +
                      std::to_string(frame.body.size()));
    }
    frame.image.emplace(w, h, std::vector<std::uint8_t>(frame.body.begin() + 4, frame.body.end()));
  }
  return frame;
}

// Key may be the full key image or its two shares.
template <typename Key>
std::size_t header_peek_length(const Key& key, const GrayImage& stego) {
  const auto header_bytes = bits_to_bytes(extract_bits(key, stego, kFrameHeaderBits));
  return parse_frame_header(header_bytes).total_bits();
}

inline GrayImage embed_frame(const GrayImage& key, std::span<const std::uint8_t> frame) {
  return embed_bits(key, bytes_to_bits(frame));
}

template <typename Key>
PayloadFrame extract_frame(const Key& key, const GrayImage& stego) {
  const auto total = header_peek_length(key, stego);
  return parse_frame(bits_to_bytes(extract_bits(key, stego, total)));
}

}  // namespace lsbxor

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lsbxor/error.hpp"

namespace lsbxor {

// Ordered sequence of 0/1 values. Stored one bit per byte; the ordering is
// the only thing that matters to the scheme.
class BitStream {
 public:
  using value_type = std::uint8_t;
  using const_iterator = std::vector<std::uint8_t>::const_iterator;

  BitStream() = default;

  BitStream(std::initializer_list<int> bits) {
    bits_.reserve(bits.size());
    for (int b : bits) {
      if (b != 0 && b != 1) {
        throw Error(Errc::malformed_block, "bit value " + std::to_string(b) + " is not 0 or 1");
      }
      bits_.push_back(static_cast<std::uint8_t>(b));
    }
  }

  void push_back(bool bit) { bits_.push_back(bit ? 1 : 0); }
  void reserve(std::size_t n) { bits_.reserve(n); }
  void truncate(std::size_t n) {
    if (n < bits_.size()) bits_.resize(n);
  }

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }

  const_iterator begin() const noexcept { return bits_.begin(); }
  const_iterator end() const noexcept { return bits_.end(); }

  void append(const BitStream& other) { bits_.insert(bits_.end(), other.begin(), other.end()); }

  std::string to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(b ? '1' : '0');
    return s;
  }

  friend bool operator==(const BitStream&, const BitStream&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct OddEvenBits {
  BitStream odd;   // 1-based odd positions (0-based indices 0, 2, 4, ...)
  BitStream even;  // 1-based even positions (0-based indices 1, 3, 5, ...)

  friend bool operator==(const OddEvenBits&, const OddEvenBits&) = default;
};

// Output bit j is bit j of the byte counted from the LSB, i.e. the MSB-first
// binary string written backwards.
inline BitStream byte_to_reversed_bits(std::uint8_t b) {
  BitStream out;
  out.reserve(8);
  for (int j = 0; j < 8; ++j) out.push_back((b >> j) & 1u);
  return out;
}

inline std::uint8_t reversed_bits_to_byte(const BitStream& s) {
  if (s.size() != 8) {
    throw Error(Errc::malformed_block,
                "expected an 8-bit block, got " + std::to_string(s.size()) + " bits");
  }
  std::uint8_t b = 0;
  for (int j = 0; j < 8; ++j) b |= static_cast<std::uint8_t>(s[j] << j);
  return b;
}

inline OddEvenBits split_odd_even(const BitStream& s) {
  OddEvenBits out;
  out.odd.reserve((s.size() + 1) / 2);
  out.even.reserve(s.size() / 2);
  for (std::size_t i = 0; i < s.size(); ++i) {
    (i % 2 == 0 ? out.odd : out.even).push_back(s[i]);
  }
  return out;
}

inline BitStream interleave(const BitStream& odd, const BitStream& even) {
  if (odd.size() != even.size() && odd.size() != even.size() + 1) {
    throw Error(Errc::malformed_shares, "odd/even streams of length " + std::to_string(odd.size()) +
                                            " and " + std::to_string(even.size()) +
                                            " cannot be interleaved");
  }
  BitStream out;
  out.reserve(odd.size() + even.size());
  for (std::size_t k = 0; k < odd.size(); ++k) {
    out.push_back(odd[k]);
    if (k < even.size()) out.push_back(even[k]);
  }
  return out;
}

inline BitStream interleave(const OddEvenBits& parts) { return interleave(parts.odd, parts.even); }

// Multi-byte messages: reversed-bit bytes concatenated in message order.
inline BitStream bytes_to_bits(std::span<const std::uint8_t> bytes) {
  BitStream out;
  out.reserve(bytes.size() * 8);
  for (auto b : bytes) out.append(byte_to_reversed_bits(b));
  return out;
}

// Slices the stream into consecutive 8-bit blocks; a trailing partial block
// is a malformed-block error.
inline std::vector<std::uint8_t> bits_to_bytes(const BitStream& s) {
  if (s.size() % 8 != 0) {
    throw Error(Errc::malformed_block,
                "bit count " + std::to_string(s.size()) + " is not a multiple of 8");
  }
  std::vector<std::uint8_t> out(s.size() / 8, 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    out[i / 8] |= static_cast<std::uint8_t>(s[i] << (i % 8));
  }
  return out;
}

}  // namespace lsbxor
